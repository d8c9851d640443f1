//! The worked-example checks behind `verify-paper`. Each check reads its modules from the
//! fixture set, so a damaged fixture shows up as a named failure.

use std::path::PathBuf;

use largescale::k2::{
    decompose, delocalize_dim, section_exists, single_axis_solvable, verify_section,
};
use largescale::linalg::Fp;
use largescale::presentation::{box_points, GradedPresentation, Multidegree, PresentationMap};
use largescale::quiver::{endomorphism_basis, is_indecomposable, quiver_shape, to_quiver_rep};
use largescale::quiver::{GraphType, Indecomposability, SplitOptions};
use largescale::support::{
    enumerate_complexes, face_ring, kdim, random_complex, serre_chain, serre_step,
};
use largescale::support::{supp_complex, FaceRingRelations, SimplicialComplex};
use serde_json::{json, Value};

use crate::files::{MapEndpoint, MapFile, ModuleFile};

const EMBEDDED: &[(&str, &str)] = &[
    (
        "samerank_M.json",
        include_str!("../../../fixtures/named/samerank_M.json"),
    ),
    (
        "samerank_N.json",
        include_str!("../../../fixtures/named/samerank_N.json"),
    ),
    (
        "notsplit.json",
        include_str!("../../../fixtures/named/notsplit.json"),
    ),
    (
        "notsplit_target.json",
        include_str!("../../../fixtures/named/notsplit_target.json"),
    ),
    (
        "m3_indecomposable.json",
        include_str!("../../../fixtures/named/m3_indecomposable.json"),
    ),
    (
        "rho_counterexample.json",
        include_str!("../../../fixtures/named/rho_counterexample.json"),
    ),
];

pub enum Fixtures {
    Embedded,
    Dir(PathBuf),
}

impl Fixtures {
    pub fn file_names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }

    fn text(&self, name: &str) -> Result<String, String> {
        match self {
            Fixtures::Embedded => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| t.to_string())
                .ok_or_else(|| format!("no fixture {name}")),
            Fixtures::Dir(dir) => {
                let p = dir.join(name);
                std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))
            }
        }
    }

    fn module(&self, f: &Fp, name: &str) -> Result<GradedPresentation<Fp>, String> {
        let text = self.text(name)?;
        ModuleFile::parse(&text, name)
            .and_then(|m| m.to_presentation(f))
            .map_err(|e| e.to_string())
    }

    fn map(&self, f: &Fp, name: &str) -> Result<PresentationMap<Fp>, String> {
        let text = self.text(name)?;
        let file: MapFile = serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
        let end = |e: &MapEndpoint| match e {
            MapEndpoint::Reference(r) => self.module(f, r),
            MapEndpoint::Inline(m) => m.to_presentation(f).map_err(|e| e.to_string()),
        };
        PresentationMap::from_i64(end(&file.source)?, end(&file.target)?, &file.coeffs)
            .map_err(|e| format!("{name}: {e}"))
    }
}

type CheckFn = fn(&Fixtures, &Fp) -> Result<String, String>;

pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub run: CheckFn,
}

pub const CHECKS: &[Check] = &[
    Check {
        id: "same-rank",
        description: "M = (t1,t2) + t1t2 R and N = t1 R + t2 R share a rank invariant but not a decomposition",
        run: same_rank,
    },
    Check {
        id: "not-split",
        description: "an epimorphism whose strip localizations split but which has no section",
        run: not_split,
    },
    Check {
        id: "rank-two-indecomposable",
        description: "the three-parameter rank 2 module is torsion-free and indecomposable",
        run: rank_two_indecomposable,
    },
    Check {
        id: "delocalization",
        description: "delocalizing R/(t1t2) gives R/(t1) + R/(t2), dimension 2 at the origin",
        run: delocalization,
    },
    Check {
        id: "face-rings",
        description: "every face ring on at most 3 vertices, and 50 on 4, has its complex as support",
        run: face_rings,
    },
    Check {
        id: "krull-chain",
        description: "Krull dimension counts simple-quotient steps; skeleta step to skeleta",
        run: krull_chain,
    },
    Check {
        id: "quiver-shape",
        description: "Q_n has 3n+1 vertices; Q_1 is D4 and Q_2 is E6~",
        run: quiver_shapes,
    },
];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn same_rank(fx: &Fixtures, f: &Fp) -> Result<String, String> {
    let m = fx.module(f, "samerank_M.json")?;
    let n = fx.module(f, "samerank_N.json")?;
    let pts = box_points(&Multidegree::zero(2), &Multidegree::from([3, 3]));
    for a in &pts {
        for b in pts.iter().filter(|b| a.le(b)) {
            ensure!(
                s(m.rank_invariant(a, b))? == s(n.rank_invariant(a, b))?,
                "rank invariants differ at {a} <= {b}"
            );
        }
    }
    let quads = |x: &GradedPresentation<Fp>| -> Result<Vec<Vec<i64>>, String> {
        Ok(s(decompose(x))?
            .quadrants
            .iter()
            .map(|(c, _)| c.coords().to_vec())
            .collect())
    };
    let (qm, qn) = (quads(&m)?, quads(&n)?);
    ensure!(
        qm == vec![vec![0, 0], vec![1, 1]],
        "M decomposes into quadrants {qm:?}"
    );
    ensure!(
        qn == vec![vec![0, 1], vec![1, 0]],
        "N decomposes into quadrants {qn:?}"
    );
    Ok("ranks agree on [0,3]^2; quadrants (0,0),(1,1) versus (0,1),(1,0)".into())
}

fn not_split(fx: &Fixtures, f: &Fp) -> Result<String, String> {
    let map = fx.map(f, "notsplit.json")?;
    ensure!(s(section_exists(&map))?.is_none(), "a section exists");
    ensure!(
        s(single_axis_solvable(&map, 1))?,
        "the first strip localization does not split"
    );
    ensure!(
        s(single_axis_solvable(&map, 2))?,
        "the second strip localization does not split"
    );
    let id = PresentationMap::identity(map.target());
    let w = s(section_exists(&id))?.ok_or("the identity has no section")?;
    ensure!(
        s(verify_section(&id, &w))?,
        "identity witness fails verification"
    );
    Ok("no section; both localized systems solvable".into())
}

fn rank_two_indecomposable(fx: &Fixtures, f: &Fp) -> Result<String, String> {
    let module = fx.module(f, "m3_indecomposable.json")?;
    ensure!(
        module.stabilization_bound() == Multidegree::from([1, 1, 1]),
        "bound {}",
        module.stabilization_bound()
    );
    let rep = s(to_quiver_rep(&module, 2))?;
    ensure!(rep.sink_dim() == 2, "sink dimension {}", rep.sink_dim());
    ensure!(rep.leg_maps_injective(), "some leg map is not injective");
    let end = s(endomorphism_basis(&rep))?.dim();
    ensure!(end <= 6, "dim End = {end} is too large to enumerate");
    match s(is_indecomposable(&rep, &SplitOptions::default()))? {
        Indecomposability::Yes => Ok(format!("sink 2, injective legs, dim End = {end}")),
        Indecomposability::No(_) => Err("found a splitting".into()),
        Indecomposability::Unknown => Err("indecomposability undecided".into()),
    }
}

fn delocalization(fx: &Fixtures, f: &Fp) -> Result<String, String> {
    let cross = fx.module(f, "rho_counterexample.json")?;
    let lines = s(s(GradedPresentation::monomial_quotient(
        f,
        2,
        &[Multidegree::from([1, 0])],
    ))?
    .direct_sum(&s(GradedPresentation::monomial_quotient(
        f,
        2,
        &[Multidegree::from([0, 1])],
    ))?))?;
    for d in box_points(&Multidegree::zero(2), &Multidegree::from([3, 3])) {
        let got = s(delocalize_dim(&cross, &d))?;
        ensure!(
            got == s(lines.dim_at(&d))?,
            "delocalized dimension {got} at {d}"
        );
    }
    let origin = s(delocalize_dim(&cross, &Multidegree::zero(2)))?;
    ensure!(origin == 2, "dimension {origin} at the origin");
    Ok("matches R/(t1) + R/(t2) on [0,3]^2".into())
}

fn face_rings(_: &Fixtures, f: &Fp) -> Result<String, String> {
    let mut all: Vec<SimplicialComplex> = Vec::new();
    for m in 1..=3 {
        all.extend(s(enumerate_complexes(m))?);
    }
    for seed in 0..50 {
        all.push(s(random_complex(4, seed))?);
    }
    for k in &all {
        let supp = s(supp_complex(&s(face_ring(
            f,
            k,
            FaceRingRelations::Minimal,
        ))?))?;
        ensure!(&supp == k, "support of the face ring of {k} is {supp}");
    }
    Ok(format!("{} complexes", all.len()))
}

fn krull_chain(_: &Fixtures, _: &Fp) -> Result<String, String> {
    for m in 1..=4 {
        for k in s(enumerate_complexes(m))? {
            ensure!(
                kdim(&k) == serre_chain(&k).len() as i64 - 2,
                "{k}: kdim {}",
                kdim(&k)
            );
        }
        for i in -2..m as i64 - 1 {
            let next = serre_step(&s(SimplicialComplex::skeleton(m, i))?);
            ensure!(
                next == s(SimplicialComplex::skeleton(m, i + 1))?,
                "skeleton({m},{i}) steps to {next}"
            );
        }
        ensure!(
            serre_chain(&s(SimplicialComplex::empty(m))?).len() == m + 2,
            "empty complex on {m} vertices"
        );
    }
    let k3 = s(SimplicialComplex::skeleton(3, 0))?;
    ensure!(
        kdim(&k3) == 1,
        "kdim of the 0-skeleton on 3 vertices is {}",
        kdim(&k3)
    );
    Ok("all complexes on at most 4 vertices".into())
}

fn quiver_shapes(_: &Fixtures, _: &Fp) -> Result<String, String> {
    for n in 1..=10 {
        let q = s(quiver_shape(n))?;
        ensure!(
            q.vertices == 3 * n + 1 && q.arrows.len() == 3 * n,
            "Q_{n} has the wrong size"
        );
    }
    ensure!(
        s(quiver_shape(1))?.graph_type == GraphType::Dynkin("D4".into()),
        "Q_1 is not D4"
    );
    ensure!(
        s(quiver_shape(2))?.graph_type == GraphType::Euclidean("E6~".into()),
        "Q_2 is not E6~"
    );
    Ok("n = 1..10".into())
}

pub fn list() -> Value {
    Value::Array(
        CHECKS
            .iter()
            .map(|c| json!({ "id": c.id, "description": c.description }))
            .collect(),
    )
}

/// Runs every check in order; the flag is true iff all passed.
pub fn run_all(fixtures: &Fixtures, f: &Fp) -> (bool, Value) {
    let mut failed = 0;
    let results: Vec<Value> = CHECKS
        .iter()
        .map(|c| {
            let (status, detail) = match (c.run)(fixtures, f) {
                Ok(d) => ("pass", d),
                Err(why) => {
                    failed += 1;
                    ("fail", format!("{} failed: {why}", c.id))
                }
            };
            json!({ "id": c.id, "description": c.description, "status": status, "detail": detail })
        })
        .collect();
    let summary = json!({ "checks": results, "passed": CHECKS.len() - failed, "failed": failed });
    (failed == 0, summary)
}
