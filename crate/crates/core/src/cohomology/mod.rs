//! GF(2) characteristic-class calculus.
//!
//! Cohomology rings are finitely presented truncated polynomial rings over
//! GF(2): generators with degrees, homogeneous relations, and a top degree
//! (the dimension of the space) beyond which everything vanishes. Normal
//! forms are computed per degree by plain row reduction over the monomial
//! basis — no Gröbner machinery, since every catalogued ring is tiny.

pub mod bundle;
pub mod catalog;
pub mod obstruction;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::rc::Rc;

/// A monomial: exponent per generator.
pub type Mono = Vec<u8>;

/// A GF(2) polynomial: the set of monomials with coefficient 1.
pub type Poly = BTreeSet<Mono>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn xor_into(p: &mut Poly, m: Mono) {
    if !p.remove(&m) {
        p.insert(m);
    }
}

/// A finitely presented truncated GF(2) cohomology ring.
#[derive(Debug)]
pub struct CohomRing {
    gens: Vec<(String, usize)>,
    dim: usize,
    /// Reduction rows keyed by leading monomial (the maximum of the row in
    /// `(degree, lex)` order).
    pivots: BTreeMap<Mono, Poly>,
    /// Normal-form monomial basis per degree `0..=dim`.
    basis: Vec<Vec<Mono>>,
}

impl CohomRing {
    /// Builds the ring. Relations must be homogeneous. Fails when the
    /// presentation collapses (`1 = 0`).
    pub fn build(
        gens: Vec<(String, usize)>,
        relations: Vec<Poly>,
        dim: usize,
    ) -> Result<Rc<CohomRing>, String> {
        for (name, deg) in &gens {
            if *deg == 0 {
                return Err(format!("generator {name} must have positive degree"));
            }
        }
        let mut ring = CohomRing { gens, dim, pivots: BTreeMap::new(), basis: Vec::new() };
        // Homogeneity check.
        for r in &relations {
            let mut degs: BTreeSet<usize> = r.iter().map(|m| ring.mono_degree(m)).collect();
            if degs.len() > 1 {
                return Err("relations must be homogeneous".into());
            }
            if degs.pop_first() == Some(0) && !r.is_empty() {
                return Err("inconsistent presentation: 1 = 0".into());
            }
        }
        // Span of all relation multiples, degree by degree.
        for rel in &relations {
            let rel: Poly = rel.iter().filter(|m| ring.mono_degree(m) <= dim).cloned().collect();
            if rel.is_empty() {
                continue;
            }
            let rdeg = ring.mono_degree(rel.iter().next().unwrap());
            for t in 0..=dim.saturating_sub(rdeg) {
                for m in ring.monomials_of_degree(t) {
                    let mut row: Poly = Poly::new();
                    for rm in &rel {
                        let prod = mono_mul(&m, rm);
                        if ring.mono_degree(&prod) <= dim {
                            xor_into(&mut row, prod);
                        }
                    }
                    ring.insert_row(row);
                }
            }
        }
        if ring.pivots.contains_key(&vec![0u8; ring.gens.len()]) {
            return Err("inconsistent presentation: 1 reduces to 0".into());
        }
        // Normal-form basis per degree: non-pivot monomials.
        for t in 0..=dim {
            let basis = ring
                .monomials_of_degree(t)
                .into_iter()
                .filter(|m| !ring.pivots.contains_key(m))
                .collect();
            ring.basis.push(basis);
        }
        Ok(Rc::new(ring))
    }

    /// The free truncated polynomial ring (no relations).
    pub fn free(gens: Vec<(String, usize)>, dim: usize) -> Rc<CohomRing> {
        Self::build(gens, Vec::new(), dim).expect("free ring is consistent")
    }

    fn insert_row(&mut self, mut row: Poly) {
        loop {
            // Leading monomial: maximum in (degree, lex) order among pivots
            // or not — rows are homogeneous so plain max works per degree.
            let lead = match row.iter().next_back() {
                Some(m) => m.clone(),
                None => return,
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let other = p.clone();
                    for m in other {
                        xor_into(&mut row, m);
                    }
                }
                None => {
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.gens
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|(n, _)| n == name)
    }

    pub fn mono_degree(&self, m: &Mono) -> usize {
        m.iter().zip(&self.gens).map(|(e, (_, d))| *e as usize * d).sum()
    }

    /// All monomials of the given total degree (bounded exponents).
    pub fn monomials_of_degree(&self, deg: usize) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0u8; self.gens.len()];
        self.enumerate(0, deg, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, idx: usize, remaining: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if idx == self.gens.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = self.gens[idx].1;
        let max = remaining / d;
        for e in 0..=max {
            cur[idx] = e as u8;
            self.enumerate(idx + 1, remaining - e * d, cur, out);
        }
        cur[idx] = 0;
    }

    /// Normal-form basis monomials of a degree (empty above `dim`).
    pub fn basis(&self, deg: usize) -> &[Mono] {
        static EMPTY: Vec<Mono> = Vec::new();
        self.basis.get(deg).unwrap_or(&EMPTY)
    }

    /// GF(2) rank of `H^deg`.
    pub fn betti(&self, deg: usize) -> usize {
        self.basis(deg).len()
    }

    /// Reduces a monomial set to normal form (degree-truncating first).
    fn normal_form(&self, p: Poly) -> Poly {
        let mut work: Poly = p.into_iter().filter(|m| self.mono_degree(m) <= self.dim).collect();
        loop {
            // Largest monomial that is a pivot.
            let hit = work.iter().rev().find(|m| self.pivots.contains_key(*m)).cloned();
            match hit {
                None => return work,
                Some(m) => {
                    let row = self.pivots.get(&m).unwrap().clone();
                    for rm in row {
                        xor_into(&mut work, rm);
                    }
                }
            }
        }
    }
}

/// A cohomology class: a normal-form monomial set in its ring.
#[derive(Clone)]
pub struct Gf2Class {
    ring: Rc<CohomRing>,
    monos: Poly,
}

impl Gf2Class {
    pub fn zero(ring: &Rc<CohomRing>) -> Self {
        Gf2Class { ring: ring.clone(), monos: Poly::new() }
    }

    pub fn one(ring: &Rc<CohomRing>) -> Self {
        let mut monos = Poly::new();
        monos.insert(vec![0u8; ring.gens.len()]);
        Gf2Class { ring: ring.clone(), monos }
    }

    pub fn generator(ring: &Rc<CohomRing>, name: &str) -> Result<Self, String> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| format!("unknown generator `{name}`"))?;
        let mut m = vec![0u8; ring.gens.len()];
        m[idx] = 1;
        let mut monos = Poly::new();
        monos.insert(m);
        Ok(Gf2Class { ring: ring.clone(), monos: ring.normal_form(monos) })
    }

    pub fn from_monos(ring: &Rc<CohomRing>, monos: Poly) -> Self {
        Gf2Class { ring: ring.clone(), monos: ring.normal_form(monos) }
    }

    pub fn ring(&self) -> &Rc<CohomRing> {
        &self.ring
    }

    pub fn monos(&self) -> &Poly {
        &self.monos
    }

    pub fn is_zero(&self) -> bool {
        self.monos.is_empty()
    }

    fn same_ring(&self, other: &Gf2Class) {
        assert!(Rc::ptr_eq(&self.ring, &other.ring), "classes from different rings");
    }

    pub fn add(&self, other: &Gf2Class) -> Gf2Class {
        self.same_ring(other);
        let mut monos = self.monos.clone();
        for m in &other.monos {
            xor_into(&mut monos, m.clone());
        }
        // Sum of normal forms is in normal form (non-pivot monomials).
        Gf2Class { ring: self.ring.clone(), monos }
    }

    pub fn mul(&self, other: &Gf2Class) -> Gf2Class {
        self.same_ring(other);
        let mut monos = Poly::new();
        for a in &self.monos {
            for b in &other.monos {
                let m = mono_mul(a, b);
                if self.ring.mono_degree(&m) <= self.ring.dim {
                    xor_into(&mut monos, m);
                }
            }
        }
        Gf2Class { ring: self.ring.clone(), monos: self.ring.normal_form(monos) }
    }

    pub fn pow(&self, k: usize) -> Gf2Class {
        let mut acc = Gf2Class::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The homogeneous component of a degree.
    pub fn component(&self, deg: usize) -> Gf2Class {
        let monos = self
            .monos
            .iter()
            .filter(|m| self.ring.mono_degree(m) == deg)
            .cloned()
            .collect();
        Gf2Class { ring: self.ring.clone(), monos }
    }

    /// Inverse of a class with unit constant term (Neumann series on the
    /// nilpotent part).
    pub fn inverse(&self) -> Result<Gf2Class, String> {
        let one = Gf2Class::one(&self.ring);
        if self.component(0).monos != one.monos {
            return Err("only classes with constant term 1 are invertible".into());
        }
        let n = self.add(&one); // nilpotent part
        let mut acc = one.clone();
        let mut pw = one;
        for _ in 0..=self.ring.dim {
            pw = pw.mul(&n);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        Ok(acc)
    }

    /// Transports the class along a generator-name-preserving map into
    /// another ring (used for product rings and re-presentations).
    pub fn transport(&self, target: &Rc<CohomRing>) -> Result<Gf2Class, String> {
        let mut monos = Poly::new();
        for m in &self.monos {
            let mut tm = vec![0u8; target.gens.len()];
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    let name = &self.ring.gens[i].0;
                    let j = target
                        .generator_index(name)
                        .ok_or_else(|| format!("target ring lacks generator `{name}`"))?;
                    tm[j] = *e;
                }
            }
            if target.mono_degree(&tm) <= target.dim {
                xor_into(&mut monos, tm);
            }
        }
        Ok(Gf2Class::from_monos(target, monos))
    }
}

impl PartialEq for Gf2Class {
    fn eq(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.ring, &other.ring) && self.monos == other.monos
    }
}

impl fmt::Debug for Gf2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly_string())
    }
}

impl fmt::Display for Gf2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly_string())
    }
}

impl Gf2Class {
    /// Renders as `1 + a + a^2*b` (monomials in (degree, lex) order).
    pub fn to_poly_string(&self) -> String {
        if self.monos.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<&Mono> = self.monos.iter().collect();
        sorted.sort_by_key(|m| (self.ring.mono_degree(m), (*m).clone()));
        sorted
            .iter()
            .map(|m| {
                let factors: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        let name = &self.ring.gens[i].0;
                        if *e == 1 { name.clone() } else { format!("{name}^{e}") }
                    })
                    .collect();
                if factors.is_empty() { "1".to_string() } else { factors.join("*") }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Parses a `1 + a + a^2*b`-style polynomial string into a raw monomial set
/// over the given generator list (no normal-form reduction).
pub fn parse_poly(gens: &[(String, usize)], input: &str) -> Result<Poly, String> {
    let input = input.trim();
    let mut monos = Poly::new();
    if input == "0" {
        return Ok(monos);
    }
    for term in input.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err("empty term".into());
        }
        let mut m = vec![0u8; gens.len()];
        if term != "1" {
            for factor in term.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        (n.trim(), e.trim().parse::<u8>().map_err(|e| e.to_string())?)
                    }
                    None => (factor, 1),
                };
                let idx = gens
                    .iter()
                    .position(|(n, _)| n == name)
                    .ok_or_else(|| format!("unknown generator `{name}`"))?;
                m[idx] += exp;
            }
        }
        xor_into(&mut monos, m);
    }
    Ok(monos)
}

/// Parses `1 + a + a^2*b`-style polynomial strings into a class.
pub fn parse_class(ring: &Rc<CohomRing>, input: &str) -> Result<Gf2Class, String> {
    Ok(Gf2Class::from_monos(ring, parse_poly(&ring.gens, input)?))
}

/// Tensor product of two rings (Künneth): generators concatenated (names
/// must be disjoint), relations lifted, top degree added.
pub fn product_ring(a: &Rc<CohomRing>, b: &Rc<CohomRing>) -> Result<Rc<CohomRing>, String> {
    let mut gens = a.gens.clone();
    for (n, d) in &b.gens {
        if a.generator_index(n).is_some() {
            return Err(format!("generator name clash `{n}` in product ring"));
        }
        gens.push((n.clone(), *d));
    }
    let (la, lb) = (a.gens.len(), b.gens.len());
    let mut relations: Vec<Poly> = Vec::new();
    let lift_a = |m: &Mono| -> Mono {
        let mut v = m.clone();
        v.extend(std::iter::repeat(0u8).take(lb));
        v
    };
    let lift_b = |m: &Mono| -> Mono {
        let mut v = vec![0u8; la];
        v.extend_from_slice(m);
        v
    };
    // Recover generating relations from the pivot rows (each pivot row is a
    // valid ideal element, and together they generate the same quotient up to
    // the truncation degree)…
    for row in a.pivots.values() {
        relations.push(row.iter().map(&lift_a).collect());
    }
    for row in b.pivots.values() {
        relations.push(row.iter().map(&lift_b).collect());
    }
    // …plus the truncations of each factor, which were implicit in the factor
    // ring's top degree: factor-pure monomials just above it vanish. One band
    // of generator-degree width suffices — every higher monomial is a
    // multiple of one in the band.
    for (ring, lift) in [(a, &lift_a as &dyn Fn(&Mono) -> Mono), (b, &lift_b)] {
        let max_gen = ring.gens.iter().map(|(_, d)| *d).max().unwrap_or(1);
        for deg in ring.dim + 1..=ring.dim + max_gen {
            for m in ring.monomials_of_degree(deg) {
                relations.push([lift(&m)].into_iter().collect());
            }
        }
    }
    CohomRing::build(gens, relations, a.dim + b.dim)
}
