//! JSON renderings of library values. Field elements are integers when they are integers and
//! strings such as `"3/2"` otherwise.

use largescale::k2::LargeScaleDecomposition;
use largescale::linalg::{Field, Matrix, Subspace};
use largescale::localization::{Barcode, Endpoint, Interval, SubsetMask};
use largescale::presentation::Multidegree;
use largescale::quiver::QuiverRep;
use largescale::support::SimplicialComplex;
use serde_json::{json, Value};

pub fn elem<F: Field>(f: &F, x: &F::Elem) -> Value {
    match f.as_integer(x) {
        Some(i) => json!(i),
        None => json!(f.display(x)),
    }
}

pub fn matrix<F: Field>(m: &Matrix<F>) -> Value {
    let f = m.field();
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| elem(f, x)).collect()))
            .collect(),
    )
}

pub fn vector<F: Field>(f: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|x| elem(f, x)).collect())
}

/// A subspace as its canonical basis, one vector per entry.
pub fn subspace<F: Field>(s: &Subspace<F>) -> Value {
    let f = s.field();
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": s.basis().columns().iter().map(|c| vector(f, c)).collect::<Vec<_>>(),
    })
}

pub fn degree(d: &Multidegree) -> Value {
    json!(d.coords())
}

pub fn interval(iv: &Interval, multiplicity: usize) -> Value {
    let end = match iv.end {
        Endpoint::Finite(b) => json!(b),
        Endpoint::Infinity => Value::Null,
    };
    json!({ "start": iv.start, "end": end, "multiplicity": multiplicity, "text": iv.to_string() })
}

pub fn bars(v: &[(Interval, usize)]) -> Value {
    Value::Array(v.iter().map(|(iv, k)| interval(iv, *k)).collect())
}

pub fn barcode(b: &Barcode) -> Value {
    json!({ "axis": b.axis, "bars": bars(&b.bars), "infinite_count": b.infinite_count() })
}

pub fn decomposition(d: &LargeScaleDecomposition) -> Value {
    json!({
        "vertical_strips": bars(&d.vertical_strips),
        "horizontal_strips": bars(&d.horizontal_strips),
        "quadrants": d.quadrants.iter().map(|(c, k)| json!({ "corner": degree(c), "multiplicity": k })).collect::<Vec<_>>(),
    })
}

pub fn mask(s: &SubsetMask) -> Value {
    json!(s.vertices())
}

pub fn complex(k: &SimplicialComplex) -> Value {
    json!({
        "m": k.m(),
        "faces": k.face_lists(),
        "text": k.to_string(),
    })
}

pub fn rep_summary<F: Field>(rep: &QuiverRep<F>) -> Value {
    json!({
        "n": rep.n(),
        "sink_dim": rep.sink_dim(),
        "leg_dims": rep.leg_dims(),
        "total_dim": rep.total_dim(),
        "leg_maps_injective": rep.leg_maps_injective(),
    })
}
