//! The space catalog: named example spaces with their GF(2) cohomology
//! rings and bundles, loaded from a JSON data file (an embedded default
//! ships with the binary).

use super::bundle::{
    self, grassmannian_ring, grassmannian_tangent, line_twist, whitney, BundleDescriptor,
    GrassMode,
};
use super::{parse_class, parse_poly, CohomRing, Gf2Class, Poly};
use serde::Deserialize;
use std::rc::Rc;

#[derive(Debug, Deserialize)]
struct CatalogFile {
    spaces: Vec<SpaceRecord>,
}

#[derive(Debug, Deserialize)]
struct GenRecord {
    name: String,
    degree: usize,
}

#[derive(Debug, Deserialize)]
struct BundleRecord {
    name: String,
    rank: usize,
    total: String,
}

#[derive(Debug, Deserialize)]
struct SpaceRecord {
    name: String,
    dim: usize,
    #[serde(default)]
    generators: Vec<GenRecord>,
    #[serde(default)]
    relations: Vec<String>,
    #[serde(default)]
    bundles: Vec<BundleRecord>,
    /// Present for `Gr_{2,n}` spaces: the ring is derived by series
    /// inversion instead of an explicit presentation.
    grassmannian_n: Option<usize>,
    /// Extra trivial dimensions (e.g. `Gr¹_{2,3} = Gr_{2,3} × ℝ`).
    #[serde(default)]
    thickened_by: usize,
}

/// A catalogued space: ring, bundles, and the data needed for derived
/// tangent classes.
#[derive(Debug)]
pub struct SpaceDescriptor {
    pub name: String,
    pub dim: usize,
    pub ring: Rc<CohomRing>,
    pub bundles: Vec<BundleDescriptor>,
    pub grassmannian_n: Option<usize>,
    pub thickened_by: usize,
}

impl SpaceDescriptor {
    fn from_record(rec: SpaceRecord) -> Result<Self, String> {
        let ring = match rec.grassmannian_n {
            Some(n) => grassmannian_ring(n, rec.thickened_by)?,
            None => {
                let gens: Vec<(String, usize)> =
                    rec.generators.iter().map(|g| (g.name.clone(), g.degree)).collect();
                let relations: Vec<Poly> = rec
                    .relations
                    .iter()
                    .map(|r| parse_poly(&gens, r))
                    .collect::<Result<_, _>>()?;
                CohomRing::build(gens, relations, rec.dim)?
            }
        };
        if let Some(n) = rec.grassmannian_n {
            if rec.dim != 2 * (n - 2) + rec.thickened_by {
                return Err(format!("space {}: dim must be 2(n−2)+thickening", rec.name));
            }
        }
        let mut bundles = Vec::new();
        for b in &rec.bundles {
            let total = parse_class(&ring, &b.total)?;
            bundles.push(BundleDescriptor::new(b.name.clone(), b.rank, total)?);
        }
        if rec.grassmannian_n.is_some() && !bundles.iter().any(|b| b.name == "taut") {
            bundles.push(bundle::tautological(&ring)?);
        }
        if let Some(t) = bundles.iter().find(|b| b.name == "tangent") {
            if t.rank != rec.dim {
                return Err(format!("space {}: tangent rank must equal dim", rec.name));
            }
        }
        Ok(SpaceDescriptor {
            name: rec.name,
            dim: rec.dim,
            ring,
            bundles,
            grassmannian_n: rec.grassmannian_n,
            thickened_by: rec.thickened_by,
        })
    }

    pub fn bundle(&self, name: &str) -> Result<&BundleDescriptor, String> {
        self.bundles
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| format!("space {} has no bundle `{name}`", self.name))
    }

    /// The tangent bundle: catalogued directly, or derived for Grassmannian
    /// spaces in the requested mode.
    pub fn tangent(&self, mode: GrassMode) -> Result<BundleDescriptor, String> {
        match self.grassmannian_n {
            Some(n) => grassmannian_tangent(&self.ring, n, self.thickened_by, mode),
            None => self.bundle("tangent").cloned(),
        }
    }

    /// `w₁(tangent) = 0`. Grassmannian spaces use the mode-independent
    /// degree-1 part.
    pub fn orientable(&self) -> Result<bool, String> {
        Ok(self.tangent(GrassMode::Paper)?.w(1).is_zero())
    }

    /// Catalogued line bundles, plus the trivial line.
    pub fn line_bundles(&self) -> Vec<BundleDescriptor> {
        let mut out = vec![BundleDescriptor::trivial(&self.ring, 1)];
        out.extend(self.bundles.iter().filter(|b| b.rank == 1).cloned());
        out
    }

    /// Candidate rank-2 bundles for obstruction searches: the trivial
    /// bundle, sums of line-bundle pairs, catalogued rank-2 bundles, and
    /// their line twists. All candidates are built from realizable pieces;
    /// the family is finite, so exhaustion never certifies nonexistence.
    pub fn rank2_candidates(&self) -> Vec<BundleDescriptor> {
        let lines = self.line_bundles();
        let mut out: Vec<BundleDescriptor> = Vec::new();
        let push = |b: BundleDescriptor, out: &mut Vec<BundleDescriptor>| {
            if !out.iter().any(|x| x.total == b.total) {
                out.push(b);
            }
        };
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i..] {
                push(whitney(a, b), &mut out);
            }
        }
        for b in self.bundles.iter().filter(|b| b.rank == 2) {
            push(b.clone(), &mut out);
            for l in &lines {
                if let Ok(t) = line_twist(b, l) {
                    push(t, &mut out);
                }
            }
        }
        out
    }
}

/// The loaded catalog.
#[derive(Debug)]
pub struct Catalog {
    pub spaces: Vec<SpaceDescriptor>,
}

pub const DEFAULT_CATALOG: &str = include_str!("../../data/catalog.json");

impl Catalog {
    pub fn load_str(json: &str) -> Result<Catalog, String> {
        let file: CatalogFile =
            serde_json::from_str(json).map_err(|e| format!("catalog parse error: {e}"))?;
        let mut spaces = Vec::new();
        for rec in file.spaces {
            spaces.push(SpaceDescriptor::from_record(rec)?);
        }
        Ok(Catalog { spaces })
    }

    pub fn load_default() -> Result<Catalog, String> {
        Self::load_str(DEFAULT_CATALOG)
    }

    pub fn load_file(path: &str) -> Result<Catalog, String> {
        let json = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        Self::load_str(&json)
    }

    pub fn space(&self, name: &str) -> Result<&SpaceDescriptor, String> {
        self.spaces
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| format!("unknown space `{name}`"))
    }

    pub fn names(&self) -> Vec<&str> {
        self.spaces.iter().map(|s| s.name.as_str()).collect()
    }
}

/// Convenience: a class rendered in a space's ring.
pub fn class_in(space: &SpaceDescriptor, expr: &str) -> Result<Gf2Class, String> {
    parse_class(&space.ring, expr)
}
