//! `spino-lab`: command-line driver for the verification suites.
//!
//! Each subcommand runs one suite and emits a JSON report on stdout plus a
//! human summary on stderr. Reports are deterministic for fixed
//! `(seed, flags)`; wall time is only ever printed to stderr. Exit code 0
//! means every check passed, 1 means at least one failure, 2 a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spino_lab::clifford::{volume_square, Multivector, Signature};
use spino_lab::cohomology::bundle::{det_line, line_twist, whitney, BundleDescriptor, GrassMode};
use spino_lab::cohomology::catalog::{Catalog, SpaceDescriptor};
use spino_lab::cohomology::obstruction::{
    self, codim2_check, obstruct_spinc, obstruct_spino, riemannian_specializations, search_e,
    Verdict,
};
use spino_lab::cohomology::{parse_class, CohomRing, Gf2Class};
use spino_lab::lowdim::{self, O2Element};
use spino_lab::pinor::{self, sugra_table};
use spino_lab::report::Report;
use spino_lab::semilinear::{
    classify_endo, f_h, s_hermitian_check, EndoKind, GammaRElement, SHermitianForm,
    SemilinearStructure,
};
use spino_lab::spino::{self, SpinoElement};
use spino_lab::{sample, RatMultivector};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "spino-lab", version, about = "Verification workbench for extended spinorial structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Suppress the human summary; emit only JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, env = "SPINOLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "SPINOLAB_TOL", default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, global = true, env = "SPINOLAB_SAMPLES", default_value_t = 100)]
    samples: usize,
    /// Space catalog file (defaults to the embedded catalog).
    #[arg(long, global = true, env = "SPINOLAB_CATALOG")]
    catalog: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clifford algebra engine checks (exact arithmetic).
    Algebra,
    /// O₂(α) group laws, realizations and the five compatibility diagrams.
    Groups,
    /// Spinᵒ_α structure: representations, embeddings, splittings.
    Spino,
    /// Pinor representation suites.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Semilinear structures on real vector spaces.
    Semilinear,
    /// Characteristic-class obstruction predicates.
    Obstruct {
        #[command(subcommand)]
        action: ObstructAction,
    },
    /// Catalog inspection and the signature table.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Every suite, in a fixed order.
    All,
}

#[derive(Debug, Subcommand)]
enum RepAction {
    /// Build γ₀ for a signature and print it as JSON.
    Build(SigArgs),
    /// Run the full representation suite for a signature.
    Check(SigArgs),
}

#[derive(Debug, Args)]
struct SigArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

#[derive(Debug, Subcommand)]
enum ObstructAction {
    /// Evaluate one obstruction predicate on a catalogued space.
    Check(ObstructArgs),
    /// Run the fixed obstruction battery.
    Suite,
}

#[derive(Debug, Args)]
struct ObstructArgs {
    #[arg(long)]
    space: String,
    #[arg(long, value_enum)]
    structure: Structure,
    /// Candidate bundle name (`trivial` for the trivial rank-2 bundle).
    #[arg(long = "E", alias = "e")]
    e: Option<String>,
    /// Search the space's rank-2 candidate family instead.
    #[arg(long)]
    search: bool,
    /// Tangent derivation mode on Grassmannian spaces.
    #[arg(long, value_enum, default_value_t = Mode::Paper)]
    mode: Mode,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Structure {
    #[value(name = "spino+")]
    SpinoPlus,
    #[value(name = "spino-")]
    SpinoMinus,
    #[value(name = "spinc+")]
    SpincPlus,
    #[value(name = "spinc-")]
    SpincMinus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Paper,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List catalogued spaces.
    List,
    /// Regenerate the low-dimensional signature table.
    Sugra,
}

#[derive(Clone, Copy)]
struct Config {
    seed: u64,
    tol: f64,
    samples: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config { seed: cli.seed, tol: cli.tol, samples: cli.samples };
    let t0 = std::time::Instant::now();
    let catalog = match &cli.catalog {
        Some(path) => Catalog::load_file(path),
        None => Catalog::load_default(),
    };
    let catalog = match catalog {
        Ok(c) => c,
        Err(e) => {
            eprintln!("catalog error: {e}");
            return ExitCode::from(2);
        }
    };

    let outcome = run(&cli, cfg, &catalog);
    let code = match outcome {
        Ok(Outcome::Reports(reports)) => {
            emit_reports(&reports, cli.json);
            if reports.iter().all(|r| r.ok()) {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Json { value, ok }) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    if !cli.json {
        eprintln!("wall time: {:.3}s", t0.elapsed().as_secs_f64());
    }
    ExitCode::from(code)
}

enum Outcome {
    Reports(Vec<Report>),
    Json { value: serde_json::Value, ok: bool },
}

fn emit_reports(reports: &[Report], json_only: bool) {
    let value = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("serializable")
    } else {
        serde_json::to_value(reports).expect("serializable")
    };
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    if !json_only {
        for r in reports {
            eprint!("{}", r.summarize());
        }
    }
}

fn run(cli: &Cli, cfg: Config, catalog: &Catalog) -> Result<Outcome, String> {
    match &cli.command {
        Command::Algebra => Ok(Outcome::Reports(vec![suite_algebra(cfg)])),
        Command::Groups => Ok(Outcome::Reports(vec![suite_groups(cfg)])),
        Command::Spino => Ok(Outcome::Reports(vec![suite_spino(cfg)])),
        Command::Rep { action } => match action {
            RepAction::Build(sig) => {
                let rep = pinor::build_gamma0(Signature::new(sig.p, sig.q))?;
                let json = pinor::RepJson::from_rep(&rep)?;
                Ok(Outcome::Json { value: serde_json::to_value(&json).expect("serializable"), ok: true })
            }
            RepAction::Check(sig) => {
                Ok(Outcome::Reports(vec![suite_rep_one(cfg, sig.p, sig.q)]))
            }
        },
        Command::Semilinear => Ok(Outcome::Reports(vec![suite_semilinear(cfg)])),
        Command::Obstruct { action } => match action {
            ObstructAction::Check(args) => obstruct_check(args, catalog),
            ObstructAction::Suite => Ok(Outcome::Reports(vec![suite_obstruct(cfg, catalog)])),
        },
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let names: Vec<serde_json::Value> = catalog
                    .spaces
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "name": s.name,
                            "dim": s.dim,
                            "bundles": s.bundles.iter().map(|b| b.name.clone()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                Ok(Outcome::Json { value: serde_json::Value::Array(names), ok: true })
            }
            CatalogAction::Sugra => {
                let table = sugra_table();
                Ok(Outcome::Json { value: serde_json::to_value(&table).expect("serializable"), ok: true })
            }
        },
        Command::All => {
            let reports = vec![
                suite_algebra(cfg),
                suite_groups(cfg),
                suite_spino(cfg),
                suite_rep(cfg),
                suite_semilinear(cfg),
                suite_obstruct(cfg, catalog),
            ];
            Ok(Outcome::Reports(reports))
        }
    }
}

// ---------------------------------------------------------------------------
// Suite: algebra.
// ---------------------------------------------------------------------------

fn suite_algebra(cfg: Config) -> Report {
    let mut rep = Report::new("algebra", cfg.seed, cfg.tol, cfg.samples);
    let mut rng = sample::rng(cfg.seed);

    // Generator relations, exactly, for every signature with d ≤ 6.
    let mut relations_ok = true;
    for d in 1..=6usize {
        for p in 0..=d {
            let alg = Signature::new(p, d - p).algebra();
            for i in 1..=d {
                for j in 1..=d {
                    let ei: RatMultivector = Multivector::generator(&alg, i);
                    let ej: RatMultivector = Multivector::generator(&alg, j);
                    let anti = ei.mul(&ej).add(&ej.mul(&ei));
                    let expect = if i == j { 2 * alg.square(i - 1) as i64 } else { 0 };
                    let expect = Multivector::scalar(
                        &alg,
                        spino_lab::scalar::Coeff::from_int(expect),
                    );
                    relations_ok &= anti == expect;
                }
            }
        }
    }
    rep.check("generator_relations_exact_d_le_6", relations_ok);

    // Associativity on random sparse rational triples.
    let mut assoc_ok = true;
    for &(p, q) in &[(3usize, 0usize), (0, 3), (2, 2), (1, 2), (3, 3)] {
        let alg = Signature::new(p, q).algebra();
        for _ in 0..cfg.samples.max(10) / 5 {
            let a = sample::rational_multivector(&alg, 4, &mut rng);
            let b = sample::rational_multivector(&alg, 4, &mut rng);
            let c = sample::rational_multivector(&alg, 4, &mut rng);
            assoc_ok &= a.mul(&b).mul(&c) == a.mul(&b.mul(&c));
        }
    }
    rep.check("associativity_exact_sampled", assoc_ok);

    // ν² = (−1)^{d(d−1)/2}(−1)^q for all d ≤ 11, and −1 exactly when
    // p−q ≡ 3, 7 (mod 8).
    let mut vol_ok = true;
    for d in 1..=11usize {
        for p in 0..=d {
            let sig = Signature::new(p, d - p);
            let alg = sig.algebra();
            let expect = if (d * (d - 1) / 2 + sig.q) % 2 == 0 { 1 } else { -1 };
            let got = volume_square(&alg);
            vol_ok &= got == expect;
            if sig.pq_mod8() == 3 || sig.pq_mod8() == 7 {
                vol_ok &= got == -1;
            }
        }
    }
    rep.check("volume_square_table_d_le_11", vol_ok);

    // Twisted norms on Cl_{0,2} (quaternion norm) and Cl_{2,0}
    // (split-quaternion norm), exactly on rational samples.
    let mut norm_ok = true;
    for &(p, q, s1, s2) in &[(0usize, 2usize, 1i64, 1i64), (2, 0, -1, -1)] {
        let alg = Signature::new(p, q).algebra();
        for _ in 0..cfg.samples {
            let a = sample::rational_multivector(&alg, 3, &mut rng);
            let n = a.twisted_norm();
            let c0 = a.blade(0b00);
            let c1 = a.blade(0b01);
            let c2 = a.blade(0b10);
            let c3 = a.blade(0b11);
            let one = |k: i64| -> num_rational::BigRational {
                spino_lab::scalar::Coeff::from_int(k)
            };
            let expect = c0.clone() * c0
                + one(s1) * c1.clone() * c1
                + one(s2) * c2.clone() * c2
                + c3.clone() * c3;
            norm_ok &= n.is_scalar() && n.scalar_part() == expect;
        }
    }
    rep.check("twisted_norm_quaternion_formulas", norm_ok);

    rep
}

// ---------------------------------------------------------------------------
// Suite: groups (O₂(α) and its realizations).
// ---------------------------------------------------------------------------

fn random_o2(alpha: i8, rng: &mut ChaCha8Rng) -> O2Element {
    O2Element::from_angle(sample::angle(rng), rng.gen_bool(0.5), alpha)
}

fn suite_groups(cfg: Config) -> Report {
    let mut rep = Report::new("groups", cfg.seed, cfg.tol, cfg.samples);
    let mut rng = sample::rng(cfg.seed);

    for &alpha in &[1i8, -1] {
        let tag = if alpha == 1 { "plus" } else { "minus" };

        // Group laws.
        let mut assoc: f64 = 0.0;
        let mut inv: f64 = 0.0;
        for _ in 0..cfg.samples {
            let a = random_o2(alpha, &mut rng);
            let b = random_o2(alpha, &mut rng);
            let c = random_o2(alpha, &mut rng);
            assoc = assoc.max(a.mul(&b).mul(&c).dist(&a.mul(&b.mul(&c))));
            inv = inv.max(a.mul(&a.inverse()).dist(&O2Element::unit(alpha)));
        }
        rep.residual(format!("o2_{tag}_associativity"), assoc);
        rep.residual(format!("o2_{tag}_inverses"), inv);

        // c² = (α, 0̂).
        let c = O2Element::c(alpha);
        let c2 = c.mul(&c);
        let expect = O2Element::new(Complex64::new(alpha as f64, 0.0), false, alpha);
        rep.residual(format!("o2_{tag}_c_squared"), c2.dist(&expect));

        // η and σ are homomorphisms; K = Ad(c).
        let mut eta_hom: f64 = 0.0;
        let mut sigma_hom: f64 = 0.0;
        let mut k_ad: f64 = 0.0;
        for _ in 0..cfg.samples {
            let a = random_o2(alpha, &mut rng);
            let b = random_o2(alpha, &mut rng);
            eta_hom = eta_hom.max(((a.mul(&b).eta() - a.eta() * b.eta()) as f64).abs());
            sigma_hom = sigma_hom.max(a.mul(&b).sigma().dist(&a.sigma().mul(&b.sigma())));
            k_ad = k_ad.max(a.conj_k().dist(&c.mul(&a).mul(&c.inverse())));
        }
        rep.residual(format!("o2_{tag}_eta_homomorphism"), eta_hom);
        rep.residual(format!("o2_{tag}_sigma_homomorphism"), sigma_hom);
        rep.residual(format!("o2_{tag}_K_is_Ad_c"), k_ad);

        // Ad₀⁽²⁾(z(θ)) = R(−2αθ) and Ad₀⁽²⁾(φ(c)) = C₀.
        let mut rot_err: f64 = 0.0;
        for _ in 0..cfg.samples {
            let theta = sample::angle(&mut rng);
            let m = lowdim::ad0(&lowdim::z_theta(alpha, theta), cfg.tol)
                .expect("z(θ) acts on the plane");
            rot_err = rot_err.max((m - lowdim::rot(-2.0 * alpha as f64 * theta)).abs().max());
        }
        rep.residual(format!("ad0_{tag}_z_theta_rotation"), rot_err);
        let d_mv = lowdim::phi_alpha(&c).expect("c is unit").mv;
        let d_err = (lowdim::ad0(&d_mv, cfg.tol).expect("e₁ acts") - lowdim::c0()).abs().max();
        rep.residual(format!("ad0_{tag}_D_reflection"), d_err);

        // The five diagrams.
        for id in lowdim::DIAGRAMS {
            match lowdim::verify_diagram(id, alpha, cfg.samples, cfg.seed, cfg.tol) {
                Ok(chk) => rep.residual(format!("{id}_{tag}"), chk.max_err),
                Err(e) => rep.detail(format!("{id}_{tag}"), false, e),
            }
        }
    }

    // Non-splitness of O₂(−): every sampled odd unit squares to (−1, 0̂).
    let minus_one = O2Element::new(Complex64::new(-1.0, 0.0), false, -1);
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let z = O2Element::from_angle(sample::angle(&mut rng), true, -1);
        worst = worst.max(z.mul(&z).dist(&minus_one));
    }
    rep.residual("o2_minus_odd_squares_to_minus_one", worst);

    rep
}

// ---------------------------------------------------------------------------
// Suite: spino.
// ---------------------------------------------------------------------------

const SPINO_SIGS: [(usize, usize); 5] = [(3, 0), (1, 2), (2, 1), (7, 0), (1, 6)];

fn suite_spino(cfg: Config) -> Report {
    let mut rep = Report::new("spino", cfg.seed, cfg.tol, cfg.samples);
    let mut rng = sample::rng(cfg.seed);

    for &(p, q) in &SPINO_SIGS {
        let sig = Signature::new(p, q);
        for &alpha in &[1i8, -1] {
            let tag = format!("{p}_{q}_{}", if alpha == 1 { "plus" } else { "minus" });

            // The six elementary representations are homomorphisms; η̃ too.
            let mut hom: f64 = 0.0;
            let mut eta_ok = true;
            // Residuals are relative to the product's matrix scale (boosts in
            // indefinite signatures have large entries).
            let rel = |lhs: DMatrix<f64>, a: DMatrix<f64>, b: DMatrix<f64>| -> f64 {
                let rhs = &a * &b;
                let scale = (a.abs().max() * b.abs().max()).max(1.0);
                (lhs - rhs).abs().max() / scale
            };
            for _ in 0..cfg.samples / 2 {
                let g = spino::random_element(sig, alpha, &mut rng);
                let h = spino::random_element(sig, alpha, &mut rng);
                let gh = g.mul(&h);
                hom = hom.max(rel(gh.mu(cfg.tol), g.mu(cfg.tol), h.mu(cfg.tol)));
                hom = hom.max(rel(gh.mu_tilde(cfg.tol), g.mu_tilde(cfg.tol), h.mu_tilde(cfg.tol)));
                hom = hom.max(rel(gh.lambda(cfg.tol), g.lambda(cfg.tol), h.lambda(cfg.tol)));
                hom = hom.max(rel(
                    gh.lambda_tilde(cfg.tol),
                    g.lambda_tilde(cfg.tol),
                    h.lambda_tilde(cfg.tol),
                ));
                eta_ok &= gh.eta_tilde() == g.eta_tilde() * h.eta_tilde();
            }
            rep.residual(format!("six_reps_homomorphism_{tag}"), hom);
            rep.check(format!("eta_tilde_homomorphism_{tag}"), eta_ok);

            // Embedding identities on distinguished elements and samples.
            let mut e1: f64 = 0.0;
            let mut e2: f64 = 0.0;
            let mut e3: f64 = 0.0;
            let mut elems = vec![
                SpinoElement::identity(sig, alpha),
                SpinoElement::twisted_unit(sig, alpha),
                SpinoElement::d_hat(sig, alpha),
            ];
            for _ in 0..cfg.samples / 2 {
                elems.push(spino::random_element(sig, alpha, &mut rng));
            }
            for g in &elems {
                e1 = e1.max(spino::eq1_residual(g, cfg.tol));
                e2 = e2.max(spino::eq2_residual(g, cfg.tol));
                e3 = e3.max(spino::e1_residual(g, cfg.tol));
            }
            rep.residual(format!("embed_untwisted_{tag}"), e1);
            rep.residual(format!("embed_twisted_{tag}"), e2);
            rep.residual(format!("embed_prime_{tag}"), e3);

            // Splitting statements.
            for chk in spino::splittings_check(sig, alpha, cfg.samples / 2, cfg.seed, cfg.tol) {
                rep.residual(format!("{}_{tag}", chk.id), chk.residual);
            }
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Suite: rep (pinor representations).
// ---------------------------------------------------------------------------

fn suite_rep(cfg: Config) -> Report {
    let mut rep = Report::new("rep", cfg.seed, cfg.tol, cfg.samples);
    for row in sugra_table() {
        rep_checks(&mut rep, cfg, row.p, row.q);
    }
    rep
}

fn suite_rep_one(cfg: Config, p: usize, q: usize) -> Report {
    let mut rep = Report::new("rep", cfg.seed, cfg.tol, cfg.samples);
    rep_checks(&mut rep, cfg, p, q);
    rep
}

fn rep_checks(out: &mut Report, cfg: Config, p: usize, q: usize) {
    let tag = format!("{p}_{q}");
    let sig = Signature::new(p, q);
    let rep = match pinor::build_gamma0(sig) {
        Ok(r) => r,
        Err(e) => {
            out.detail(format!("build_{tag}"), false, e);
            return;
        }
    };
    let d = sig.dim();
    out.check(format!("build_{tag}_N"), rep.n == 1usize << ((d + 1) / 2));

    let subspaces = match pinor::natural_subspaces(&rep) {
        Ok(s) => s,
        Err(e) => {
            out.detail(format!("subspaces_{tag}"), false, e);
            return;
        }
    };
    out.check(
        format!("schur_anticommutant_dims_{tag}"),
        subspaces.schur.len() == 2 && subspaces.anti.len() == 2,
    );

    let dmat = match pinor::find_d(&rep, &subspaces) {
        Ok(d) => d,
        Err(e) => {
            out.detail(format!("find_D_{tag}"), false, e);
            return;
        }
    };
    let alpha = pinor::alpha_pq(p, q).expect("supported signature");
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    out.residual(
        format!("D_squared_{tag}"),
        (&dmat * &dmat - alpha as f64 * &id).abs().max(),
    );
    out.detail(
        format!("extension_crosscheck_{tag}"),
        pinor::extension_crosscheck(&rep, &dmat).is_ok(),
        format!("adjoining D realizes Cl({},{})", if alpha == 1 { p + 1 } else { p }, if alpha == 1 { q } else { q + 1 }),
    );

    // The torsor: rotate D and recover the angle.
    let mut rng = sample::rng(cfg.seed);
    let theta = sample::angle(&mut rng);
    let d2 = pinor::rotate_d(&rep, &dmat, theta);
    match pinor::torsor_angle(&rep, &dmat, &d2) {
        Ok(rec) => {
            let diff = (rec - theta).rem_euclid(std::f64::consts::TAU);
            let diff = diff.min(std::f64::consts::TAU - diff);
            out.residual(format!("torsor_recovery_{tag}"), diff);
        }
        Err(e) => out.detail(format!("torsor_recovery_{tag}"), false, e),
    }

    let g2 = match pinor::gamma2(&rep, 1, &dmat) {
        Ok(g) => g,
        Err(e) => {
            out.detail(format!("gamma2_{tag}"), false, e);
            return;
        }
    };
    out.check(format!("gamma2_relations_{tag}"), true);

    // Eq. CMcond: γ₀(λ̃(g)v)·γ_o(g) = γ_o(g)·γ₀(v).
    let alg = sig.algebra();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let g = spino::random_element(sig, alpha, &mut rng);
        let coords: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let v = Multivector::vector(&alg, &coords);
        let lt = g.lambda_tilde(cfg.tol);
        let vcol = DMatrix::<f64>::from_column_slice(d, 1, &coords);
        let w = &lt * vcol;
        let wv = Multivector::vector(&alg, w.column(0).as_slice());
        let go = pinor::gamma_o(&g, &rep, &g2);
        let lhs = pinor::evaluate(&rep, &wv) * &go;
        let rhs = &go * pinor::evaluate(&rep, &v);
        let scale = (go.abs().max() * lhs.abs().max().max(1.0)).max(1.0);
        worst = worst.max((lhs - rhs).abs().max() / scale);
    }
    out.residual(format!("cmcond_{tag}"), worst);

    // Majorana projectors for α = +1.
    if alpha == 1 {
        match pinor::majorana(&rep, &dmat) {
            Ok(proj) => {
                let mut swap: f64 = 0.0;
                for g in &rep.gens {
                    // γ(e_i) exchanges the eigenspaces: 𝒫_∓ γ 𝒫_± = γ 𝒫_±.
                    swap = swap.max((g * &proj.plus - &proj.minus * g * &proj.plus).abs().max());
                    swap = swap.max((g * &proj.minus - &proj.plus * g * &proj.minus).abs().max());
                }
                out.residual(format!("majorana_exchange_{tag}"), swap);
            }
            Err(e) => out.detail(format!("majorana_{tag}"), false, e),
        }
    } else {
        out.check(
            format!("majorana_rejected_{tag}"),
            pinor::majorana(&rep, &dmat).is_err(),
        );
    }
}

// ---------------------------------------------------------------------------
// Suite: semilinear.
// ---------------------------------------------------------------------------

fn random_gamma_r(r: usize, rng: &mut ChaCha8Rng) -> GammaRElement {
    let a = DMatrix::<Complex64>::from_fn(r, r, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    GammaRElement::new(a, rng.gen_bool(0.5))
}

fn suite_semilinear(cfg: Config) -> Report {
    let mut rep = Report::new("semilinear", cfg.seed, cfg.tol, cfg.samples);
    let mut rng = sample::rng(cfg.seed);

    for r in 1..=3usize {
        let s = SemilinearStructure::canonical(r);
        let mut hom: f64 = 0.0;
        let mut det_err: f64 = 0.0;
        let mut class_ok = true;
        for _ in 0..cfg.samples / 2 {
            let g = random_gamma_r(r, &mut rng);
            let h = random_gamma_r(r, &mut rng);
            hom = hom.max((g.mul(&h).realify() - g.realify() * h.realify()).abs().max());
            let m = g.realify();
            det_err = det_err.max((m.determinant() - g.det_formula()).abs());
            let expect = if g.t { EndoKind::Antilinear } else { EndoKind::Linear };
            class_ok &= classify_endo(&m, &s, 1e-9) == expect;
            // The classification is invariant under J ↦ −J.
            class_ok &= classify_endo(&m, &s.conjugate(), 1e-9) == expect;
        }
        rep.residual(format!("gamma{r}_realification_homomorphism"), hom);
        rep.residual(format!("gamma{r}_det_formula"), det_err);
        rep.check(format!("gamma{r}_endo_classification"), class_ok);

        // s-Hermitian axioms for the standard form, and the orientation sign
        // parity law f_h(−J) = (−1)^r f_h(J).
        let h = SHermitianForm::standard(&s);
        rep.check(
            format!("s_hermitian_standard_r{r}"),
            s_hermitian_check(&h, &s).ok(cfg.tol),
        );
        match (f_h(&s, &h.h_r), f_h(&s.conjugate(), &h.h_r)) {
            (Ok(fj), Ok(fjc)) => {
                let expect = if r % 2 == 0 { fj } else { -fj };
                rep.check(format!("f_h_parity_law_r{r}"), fjc == expect);
            }
            _ => rep.detail(format!("f_h_parity_law_r{r}"), false, "orientation sign failed"),
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Suite: obstruct.
// ---------------------------------------------------------------------------

fn suite_obstruct(cfg: Config, catalog: &Catalog) -> Report {
    let mut rep = Report::new("obstruct", cfg.seed, cfg.tol, cfg.samples);

    // The four definite-signature reductions of the obstruction system.
    match riemannian_specializations() {
        Ok(specs) => {
            let expected = [
                (1i8, 3usize, "w2E + w2P = 0"),
                (1, 7, "w2E + w1E^2 + w2P = 0"),
                (-1, 3, "w2E + w1E^2 + w2P = 0"),
                (-1, 7, "w2E + w2P = 0"),
            ];
            for (sign, class, cond2) in expected {
                let hit = specs
                    .iter()
                    .find(|s| s.metric_sign == sign && s.pq_mod8 == class);
                let ok = hit.map_or(false, |s| {
                    s.conditions[0] == "w1E + w1P = 0" && s.conditions[1] == cond2
                });
                rep.detail(
                    format!(
                        "specialization_{}_{class}",
                        if sign == 1 { "pos" } else { "neg" }
                    ),
                    ok,
                    hit.map_or("missing".to_string(), |s| s.conditions[1].clone()),
                );
            }
        }
        Err(e) => rep.detail("specializations", false, e),
    }

    // Determinant-twist identities for a generic rank-2 bundle E.
    rep.record("det_twist_identities", erels_check(), |ok| *ok);

    // M₂ × ℝ carries the α = −1 structure with E the pulled-back frame.
    for name in ["rp2xr", "kleinxr", "sigma2xr"] {
        let id = format!("spino_minus_{name}");
        match spino_on_space(catalog, name, -1, "frame", GrassMode::Paper) {
            Ok(v) => rep.detail(id, v.holds, residual_string(&v)),
            Err(e) => rep.detail(id, false, e),
        }
    }

    // The thickened Grassmannian: α = +1 with E the tautological bundle.
    match spino_on_space(catalog, "gr2n1", 1, "taut", GrassMode::Paper) {
        Ok(v) => rep.detail("spino_plus_gr2n1_paper_taut", v.holds, residual_string(&v)),
        Err(e) => rep.detail("spino_plus_gr2n1_paper_taut", false, e),
    }

    // Witness search in oracle mode finds E with w = 1 + w₁.
    match search_on_space(catalog, "gr2n1", 1, GrassMode::Oracle) {
        Ok(outcome) => {
            let ok = outcome
                .witness
                .as_ref()
                .map_or(false, |(_, w)| w == "1 + w1");
            rep.detail(
                "search_gr2n1_oracle",
                ok,
                outcome
                    .witness
                    .map_or("none found".to_string(), |(n, w)| format!("{n}: {w}")),
            );
        }
        Err(e) => rep.detail("search_gr2n1_oracle", false, e),
    }

    // Spinᶜ on the orientable examples with trivial E.
    for name in ["s2", "t2", "rp3"] {
        for alpha in [1i8, -1] {
            let id = format!("spinc_{}_{name}", if alpha == 1 { "plus" } else { "minus" });
            match spinc_on_space(catalog, name, alpha) {
                Ok(v) => rep.detail(id, v.holds, residual_string(&v)),
                Err(e) => rep.detail(id, false, e),
            }
        }
    }

    // Codimension-two restriction identities on the projective-plane data.
    match codim2_example(catalog) {
        Ok(v) => rep.detail("codim2_identities", v.holds, residual_string(&v)),
        Err(e) => rep.detail("codim2_identities", false, e),
    }

    // The two tangent derivations disagree on Gr_{2,3}; report, don't hide.
    match grass_discrepancy(catalog) {
        Ok((paper, oracle)) => rep.detail(
            "gr23_tangent_mode_discrepancy",
            paper != oracle,
            format!("paper: {paper}; oracle: {oracle}"),
        ),
        Err(e) => rep.detail("gr23_tangent_mode_discrepancy", false, e),
    }

    rep
}

fn residual_string(v: &Verdict) -> String {
    v.residuals
        .iter()
        .map(|(l, r)| format!("{l}: {r}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn spino_on_space(
    catalog: &Catalog,
    name: &str,
    alpha: i8,
    e_name: &str,
    mode: GrassMode,
) -> Result<Verdict, String> {
    let space = catalog.space(name)?;
    let tangent = space.tangent(mode)?;
    let e = resolve_bundle(space, e_name)?;
    let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
    obstruct_spino(&tangent, &trivial0, &e, alpha, space.dim, 0)
}

fn spinc_on_space(catalog: &Catalog, name: &str, alpha: i8) -> Result<Verdict, String> {
    let space = catalog.space(name)?;
    let tangent = space.tangent(GrassMode::Paper)?;
    let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
    let e = BundleDescriptor::trivial(&space.ring, 2);
    obstruct_spinc(&tangent, &trivial0, &e, alpha)
}

fn search_on_space(
    catalog: &Catalog,
    name: &str,
    alpha: i8,
    mode: GrassMode,
) -> Result<obstruction::SearchOutcome, String> {
    let space = catalog.space(name)?;
    let tangent = space.tangent(mode)?;
    let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
    let dim = space.dim;
    search_e(space, |e| obstruct_spino(&tangent, &trivial0, e, alpha, dim, 0))
}

fn resolve_bundle(space: &SpaceDescriptor, name: &str) -> Result<BundleDescriptor, String> {
    if name == "trivial" {
        return Ok(BundleDescriptor::trivial(&space.ring, 2));
    }
    space.bundle(name).cloned()
}

/// `w((det E)E) = w(E)` in degrees 1 and 2, and
/// `w₁((det E)E ×_M det E) = 0`, symbolically for generic rank-2 `E`.
fn erels_check() -> Result<bool, String> {
    let ring = CohomRing::free(vec![("w1E".into(), 1), ("w2E".into(), 2)], 4);
    let total = parse_class(&ring, "1 + w1E + w2E")?;
    let e = BundleDescriptor::new("E", 2, total)?;
    let det = det_line(&e);
    let twisted = line_twist(&e, &det)?;
    let ok1 = twisted.w(1) == e.w(1) && twisted.w(2) == e.w(2);
    // w₁((det E)E ×_M det E) = w₁(E) + w₁(E) = 0.
    let prod = whitney(&twisted, &det);
    let ok2 = prod.w(1) == Gf2Class::zero(&ring);
    Ok(ok1 && ok2)
}

fn codim2_example(catalog: &Catalog) -> Result<Verdict, String> {
    let space = catalog.space("rp2")?;
    let tangent = space.tangent(GrassMode::Paper)?;
    let normal = BundleDescriptor::new(
        "normal",
        2,
        tangent.total.inverse()?,
    )?;
    codim2_check(&tangent, &normal, 1)
}

fn grass_discrepancy(catalog: &Catalog) -> Result<(String, String), String> {
    let space = catalog.space("gr23")?;
    let paper = space.tangent(GrassMode::Paper)?;
    let oracle = space.tangent(GrassMode::Oracle)?;
    Ok((paper.total.to_poly_string(), oracle.total.to_poly_string()))
}

// ---------------------------------------------------------------------------
// obstruct check (single predicate).
// ---------------------------------------------------------------------------

fn obstruct_check(args: &ObstructArgs, catalog: &Catalog) -> Result<Outcome, String> {
    let space = catalog.space(&args.space)?;
    let mode = match args.mode {
        Mode::Paper => GrassMode::Paper,
        Mode::Oracle => GrassMode::Oracle,
    };
    let tangent = space.tangent(mode)?;
    let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
    let alpha = match args.structure {
        Structure::SpinoPlus | Structure::SpincPlus => 1i8,
        Structure::SpinoMinus | Structure::SpincMinus => -1,
    };
    let is_spino = matches!(args.structure, Structure::SpinoPlus | Structure::SpinoMinus);

    let predicate = |e: &BundleDescriptor| -> Result<Verdict, String> {
        if is_spino {
            obstruct_spino(&tangent, &trivial0, e, alpha, space.dim, 0)
        } else {
            obstruct_spinc(&tangent, &trivial0, e, alpha)
        }
    };

    if args.search {
        let outcome = search_e(space, predicate)?;
        let ok = outcome.witness.is_some();
        return Ok(Outcome::Json {
            value: serde_json::to_value(&outcome).expect("serializable"),
            ok,
        });
    }

    let e_name = args.e.as_deref().ok_or("provide --E NAME or --search")?;
    let e = resolve_bundle(space, e_name)?;
    let verdict = predicate(&e)?;
    let ok = verdict.holds;
    Ok(Outcome::Json { value: serde_json::to_value(&verdict).expect("serializable"), ok })
}
