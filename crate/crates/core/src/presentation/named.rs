use super::{GradedPresentation, Multidegree, PresentationMap};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// Fixed names and parameterized families understood by [`named_example`].
pub const NAMED_EXAMPLES: &[&str] = &[
    "samerank_M",
    "samerank_N",
    "notsplit",
    "notsplit_source",
    "notsplit_target",
    "m3_indecomposable",
    "rho_counterexample",
    "quadrant(a1,...,am)",
    "vstrip(a,b)",
    "hstrip(a,b)",
];

#[derive(Clone, Debug)]
pub enum NamedObject<F: Field> {
    Module(GradedPresentation<F>),
    Map(PresentationMap<F>),
}

impl<F: Field> NamedObject<F> {
    pub fn into_module(self) -> Option<GradedPresentation<F>> {
        match self {
            NamedObject::Module(m) => Some(m),
            NamedObject::Map(_) => None,
        }
    }

    pub fn into_map(self) -> Option<PresentationMap<F>> {
        match self {
            NamedObject::Map(m) => Some(m),
            NamedObject::Module(_) => None,
        }
    }
}

fn module<F: Field>(
    field: &F,
    m: usize,
    gens: &[&[i64]],
    rels: &[(&[i64], &[i64])],
) -> Result<GradedPresentation<F>> {
    GradedPresentation::from_i64(
        field,
        m,
        &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>(),
        &rels
            .iter()
            .map(|(d, c)| (d.to_vec(), c.to_vec()))
            .collect::<Vec<_>>(),
    )
}

/// `(t1, t2) ⊕ t1t2 R`: the ideal on generators at (1,0) and (0,1) with the Koszul relation,
/// plus a free summand at (1,1).
fn samerank_m<F: Field>(f: &F) -> Result<GradedPresentation<F>> {
    module(
        f,
        2,
        &[&[1, 0], &[0, 1], &[1, 1]],
        &[(&[1, 1], &[1, -1, 0])],
    )
}

/// `t1 R ⊕ t2 R`.
fn samerank_n<F: Field>(f: &F) -> Result<GradedPresentation<F>> {
    module(f, 2, &[&[1, 0], &[0, 1]], &[])
}

fn strip<F: Field>(f: &F, axis: usize, a: i64, b: i64) -> Result<GradedPresentation<F>> {
    if a < 0 || b <= a {
        return Err(Error::EmptyParameterRange(format!(
            "strip needs 0 <= a < b, got [{a},{b})"
        )));
    }
    let gen = Multidegree::zero(2).with(axis, a);
    let rel = Multidegree::zero(2).with(axis, b);
    GradedPresentation::new(
        f,
        2,
        vec![gen],
        vec![rel],
        crate::linalg::Matrix::from_fn(f, 1, 1, |_, _| f.one()),
    )
}

/// `t1^a R / t1^b`, a vertical strip.
pub fn vstrip<F: Field>(f: &F, a: i64, b: i64) -> Result<GradedPresentation<F>> {
    strip(f, 0, a, b)
}

/// `t2^a R / t2^b`, a horizontal strip.
pub fn hstrip<F: Field>(f: &F, a: i64, b: i64) -> Result<GradedPresentation<F>> {
    strip(f, 1, a, b)
}

fn parse_call(name: &str) -> Option<(&str, Result<Vec<i64>>)> {
    let open = name.find('(')?;
    let inner = name[open + 1..].strip_suffix(')')?;
    let args = if inner.trim().is_empty() {
        Ok(vec![])
    } else {
        inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::UnknownName(name.to_string()))
            })
            .collect()
    };
    Some((name[..open].trim(), args))
}

fn expect_args(name: &str, args: &[i64], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::WrongParameterCount {
            name: name.to_string(),
            expected: n,
            found: args.len(),
        });
    }
    Ok(())
}

/// Looks up a named module or map.
pub fn named_example<F: Field>(field: &F, name: &str) -> Result<NamedObject<F>> {
    use NamedObject::{Map, Module};
    let name = name.trim();
    if let Some((head, args)) = parse_call(name) {
        let args = args?;
        return match head {
            "quadrant" | "free" => {
                if args.is_empty() {
                    return Err(Error::WrongParameterCount {
                        name: head.to_string(),
                        expected: 1,
                        found: 0,
                    });
                }
                Ok(Module(GradedPresentation::free(
                    field,
                    &Multidegree::new(args),
                )?))
            }
            "vstrip" => {
                expect_args(head, &args, 2)?;
                Ok(Module(vstrip(field, args[0], args[1])?))
            }
            "hstrip" => {
                expect_args(head, &args, 2)?;
                Ok(Module(hstrip(field, args[0], args[1])?))
            }
            _ => Err(Error::UnknownName(name.to_string())),
        };
    }
    match name {
        "samerank_M" => Ok(Module(samerank_m(field)?)),
        "samerank_N" | "notsplit_source" => Ok(Module(samerank_n(field)?)),
        "notsplit_target" => Ok(Module(GradedPresentation::free(
            field,
            &Multidegree::zero(2),
        )?)),
        "notsplit" => Ok(Map(PresentationMap::from_i64(
            samerank_n(field)?,
            GradedPresentation::free(field, &Multidegree::zero(2))?,
            &[vec![1, 1]],
        )?)),
        "m3_indecomposable" => Ok(Module(module(
            field,
            3,
            &[&[0, 1, 1], &[1, 1, 0], &[1, 0, 1]],
            &[(&[1, 1, 1], &[1, -1, 1])],
        )?)),
        "rho_counterexample" => Ok(Module(GradedPresentation::monomial_quotient(
            field,
            2,
            &[Multidegree::from([1, 1])],
        )?)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
