//! On-disk formats: module files, map files, quiver representation files, complexes and
//! decompositions. Every file carries `"format": 1`.

use std::path::{Path, PathBuf};

use largescale::k2::LargeScaleDecomposition;
use largescale::linalg::{Field, Matrix};
use largescale::localization::{Endpoint, Interval, SubsetMask};
use largescale::presentation::{named_example, GradedPresentation, Multidegree, PresentationMap};
use largescale::quiver::QuiverRep;
use largescale::support::SimplicialComplex;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::CliError;

pub const FORMAT: u32 = 1;

fn format_one() -> u32 {
    FORMAT
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub degree: Vec<i64>,
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub characteristic: u64,
    pub m: usize,
    pub generators: Vec<Vec<i64>>,
    pub relations: Vec<RelationEntry>,
}

#[derive(Deserialize)]
struct RawModuleFile<'a> {
    format: Option<u32>,
    characteristic: u64,
    m: usize,
    #[serde(borrow)]
    generators: &'a RawValue,
    #[serde(borrow)]
    relations: Vec<&'a RawValue>,
}

/// 1-based line and column of byte `offset` in `text`.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

/// A serde error as an input error, with the location given once.
fn json_error(path: String, e: &serde_json::Error) -> CliError {
    let text = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let reason = text.strip_suffix(&suffix).unwrap_or(&text);
    CliError::Input {
        path,
        reason: format!("line {}, column {}: {reason}", e.line(), e.column()),
    }
}

fn offset_in(text: &str, part: &str) -> usize {
    part.as_ptr() as usize - text.as_ptr() as usize
}

impl ModuleFile {
    /// Parses and validates, reporting problems with the line and column where the offending
    /// entry starts.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let bad = |line: usize, col: usize, reason: String| CliError::Input {
            path: origin.to_string(),
            reason: format!("line {line}, column {col}: {reason}"),
        };
        let raw: RawModuleFile =
            serde_json::from_str(text).map_err(|e| json_error(origin.to_string(), &e))?;
        if let Some(v) = raw.format {
            if v != FORMAT {
                return Err(bad(1, 1, format!("unsupported format {v}")));
            }
        }
        let at = |part: &str| line_col(text, offset_in(text, part.trim_start()));
        let (gl, gc) = at(raw.generators.get());
        let generators: Vec<Vec<i64>> = serde_json::from_str(raw.generators.get())
            .map_err(|e| bad(gl, gc, format!("generators: {e}")))?;
        if raw.m == 0 {
            return Err(bad(1, 1, "m must be at least 1".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != raw.m {
                return Err(bad(
                    gl,
                    gc,
                    format!(
                        "generator {i} has {} coordinates, expected {}",
                        g.len(),
                        raw.m
                    ),
                ));
            }
            if g.iter().any(|&x| x < 0) {
                return Err(bad(
                    gl,
                    gc,
                    format!("generator {i} has a negative coordinate"),
                ));
            }
        }
        let mut relations = Vec::with_capacity(raw.relations.len());
        for (j, r) in raw.relations.iter().enumerate() {
            let (l, c) = at(r.get());
            let rel: RelationEntry = serde_json::from_str(r.get())
                .map_err(|e| bad(l, c, format!("relation {j}: {e}")))?;
            if rel.degree.len() != raw.m {
                return Err(bad(
                    l,
                    c,
                    format!("relation {j} degree has {} coordinates", rel.degree.len()),
                ));
            }
            if rel.degree.iter().any(|&x| x < 0) {
                return Err(bad(l, c, format!("relation {j} has a negative degree")));
            }
            if rel.coeffs.len() != generators.len() {
                return Err(bad(
                    l,
                    c,
                    format!(
                        "relation {j} has {} coefficients for {} generators",
                        rel.coeffs.len(),
                        generators.len()
                    ),
                ));
            }
            for (i, &x) in rel.coeffs.iter().enumerate() {
                let vanishes = match raw.characteristic {
                    0 => x == 0,
                    p => x.rem_euclid(p as i64) == 0,
                };
                let below = generators[i].iter().zip(&rel.degree).all(|(g, d)| g <= d);
                if !vanishes && !below {
                    return Err(bad(
                        l,
                        c,
                        format!(
                            "relation {j} is not homogeneous: generator {i} lies above its degree"
                        ),
                    ));
                }
            }
            relations.push(rel);
        }
        Ok(ModuleFile {
            format: FORMAT,
            characteristic: raw.characteristic,
            m: raw.m,
            generators,
            relations,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module files serialize")
    }

    pub fn to_presentation<F: Field>(&self, field: &F) -> Result<GradedPresentation<F>, CliError> {
        let rels: Vec<(Vec<i64>, Vec<i64>)> = self
            .relations
            .iter()
            .map(|r| (r.degree.clone(), r.coeffs.clone()))
            .collect();
        Ok(GradedPresentation::from_i64(
            field,
            self.m,
            &self.generators,
            &rels,
        )?)
    }

    pub fn from_presentation<F: Field>(module: &GradedPresentation<F>) -> Result<Self, CliError> {
        let f = module.field();
        let relations = (0..module.num_rels())
            .map(|j| {
                let coeffs = (0..module.num_gens())
                    .map(|i| {
                        let x = module.rel_coeffs().get(i, j);
                        f.as_integer(x).ok_or_else(|| {
                            CliError::Unsupported(format!(
                                "coefficient {} is not an integer",
                                f.display(x)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RelationEntry {
                    degree: module.rel_degrees()[j].coords().to_vec(),
                    coeffs,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(ModuleFile {
            format: FORMAT,
            characteristic: f.config().characteristic(),
            m: module.m(),
            generators: module
                .gen_degrees()
                .iter()
                .map(|d| d.coords().to_vec())
                .collect(),
            relations,
        })
    }
}

/// Where a module comes from: `named:NAME` or a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Named(String),
    Path(PathBuf),
}

impl ModuleSpec {
    pub fn parse(s: &str) -> Self {
        match s.strip_prefix("named:") {
            Some(name) => ModuleSpec::Named(name.to_string()),
            None => ModuleSpec::Path(PathBuf::from(s)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ModuleSpec::Named(n) => format!("named:{n}"),
            ModuleSpec::Path(p) => p.display().to_string(),
        }
    }
}

/// Reads every input file exactly once and remembers the bytes for the report digest.
#[derive(Default)]
pub struct Inputs {
    pub seen: Vec<(String, Vec<u8>)>,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let label = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input {
            path: label.clone(),
            reason: e.to_string(),
        })?;
        self.seen.push((label, text.clone().into_bytes()));
        Ok(text)
    }

    pub fn note(&mut self, label: String) {
        self.seen.push((label, Vec::new()));
    }

    /// The characteristic a file declares, if it is a file with one.
    pub fn peek_characteristic(path: &Path) -> Option<u64> {
        let text = std::fs::read_to_string(path).ok()?;
        let v: serde_json::Value = serde_json::from_str(&text).ok()?;
        if let Some(c) = v.get("characteristic").and_then(|c| c.as_u64()) {
            return Some(c);
        }
        ["source", "target"]
            .iter()
            .find_map(|k| v.get(*k)?.get("characteristic")?.as_u64())
    }

    pub fn module<F: Field>(
        &mut self,
        field: &F,
        spec: &ModuleSpec,
    ) -> Result<GradedPresentation<F>, CliError> {
        match spec {
            ModuleSpec::Named(name) => {
                self.note(spec.label());
                named_example(field, name)?
                    .into_module()
                    .ok_or_else(|| CliError::Usage(format!("named:{name} is a map, not a module")))
            }
            ModuleSpec::Path(p) => {
                let text = self.read(p)?;
                ModuleFile::parse(&text, &p.display().to_string())?.to_presentation(field)
            }
        }
    }

    pub fn map<F: Field>(
        &mut self,
        field: &F,
        spec: &ModuleSpec,
    ) -> Result<PresentationMap<F>, CliError> {
        match spec {
            ModuleSpec::Named(name) => {
                self.note(spec.label());
                named_example(field, name)?
                    .into_map()
                    .ok_or_else(|| CliError::Usage(format!("named:{name} is a module, not a map")))
            }
            ModuleSpec::Path(p) => {
                let text = self.read(p)?;
                let file: MapFile = serde_json::from_str(&text)
                    .map_err(|e| json_error(p.display().to_string(), &e))?;
                let base = p.parent().unwrap_or(Path::new("."));
                let source = self.endpoint(field, &file.source, base, p)?;
                let target = self.endpoint(field, &file.target, base, p)?;
                Ok(PresentationMap::from_i64(source, target, &file.coeffs)?)
            }
        }
    }

    fn endpoint<F: Field>(
        &mut self,
        field: &F,
        e: &MapEndpoint,
        base: &Path,
        origin: &Path,
    ) -> Result<GradedPresentation<F>, CliError> {
        match e {
            MapEndpoint::Inline(file) => {
                let text = serde_json::to_string(file).expect("module files serialize");
                ModuleFile::parse(&text, &origin.display().to_string())?.to_presentation(field)
            }
            MapEndpoint::Reference(s) => match ModuleSpec::parse(s) {
                ModuleSpec::Path(p) if p.is_relative() => {
                    self.module(field, &ModuleSpec::Path(base.join(p)))
                }
                other => self.module(field, &other),
            },
        }
    }

    pub fn rep<F: Field>(&mut self, field: &F, path: &Path) -> Result<QuiverRep<F>, CliError> {
        let text = self.read(path)?;
        let file: RepFile =
            serde_json::from_str(&text).map_err(|e| json_error(path.display().to_string(), &e))?;
        file.to_rep(field)
    }

    pub fn complex(&mut self, spec: &str) -> Result<SimplicialComplex, CliError> {
        if let Some(k) = parse_complex_shorthand(spec)? {
            self.note(spec.to_string());
            return Ok(k);
        }
        let path = Path::new(spec);
        let text = self.read(path)?;
        let file: ComplexFile =
            serde_json::from_str(&text).map_err(|e| json_error(spec.to_string(), &e))?;
        let faces = file
            .faces
            .iter()
            .map(|f| SubsetMask::from_vertices(f))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialComplex::closure(file.m, faces)?)
    }

    pub fn decomposition(&mut self, path: &Path) -> Result<LargeScaleDecomposition, CliError> {
        let text = self.read(path)?;
        let file: DecompositionFile =
            serde_json::from_str(&text).map_err(|e| json_error(path.display().to_string(), &e))?;
        file.to_decomposition()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapEndpoint {
    Reference(String),
    Inline(ModuleFile),
}

/// A module map: column `j` of `coeffs` is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub source: MapEndpoint,
    pub target: MapEndpoint,
    pub coeffs: Vec<Vec<i64>>,
}

impl MapFile {
    pub fn from_map<F: Field>(map: &PresentationMap<F>) -> Result<Self, CliError> {
        Ok(MapFile {
            format: FORMAT,
            source: MapEndpoint::Inline(ModuleFile::from_presentation(map.source())?),
            target: MapEndpoint::Inline(ModuleFile::from_presentation(map.target())?),
            coeffs: integer_rows(map.coeffs())?,
        })
    }
}

pub fn integer_rows<F: Field>(m: &Matrix<F>) -> Result<Vec<Vec<i64>>, CliError> {
    m.to_i64_rows()
        .ok_or_else(|| CliError::Unsupported("matrix has non-integer entries".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegFile {
    pub dims: Vec<usize>,
    /// Arrow `k` as a row list; the last arrow points into the sink.
    pub arrows: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub characteristic: u64,
    pub n: usize,
    pub sink_dim: usize,
    pub legs: Vec<LegFile>,
}

impl RepFile {
    pub fn from_rep<F: Field>(rep: &QuiverRep<F>) -> Result<Self, CliError> {
        let legs = (0..3)
            .map(|l| {
                Ok(LegFile {
                    dims: rep.leg_dims()[l].clone(),
                    arrows: rep
                        .leg_arrows(l)
                        .iter()
                        .map(integer_rows)
                        .collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(RepFile {
            format: FORMAT,
            characteristic: rep.field().config().characteristic(),
            n: rep.n(),
            sink_dim: rep.sink_dim(),
            legs,
        })
    }

    pub fn to_rep<F: Field>(&self, field: &F) -> Result<QuiverRep<F>, CliError> {
        if self.legs.len() != 3 {
            return Err(CliError::Usage(format!(
                "a representation has 3 legs, found {}",
                self.legs.len()
            )));
        }
        let mut dims: [Vec<usize>; 3] = Default::default();
        let mut arrows: [Vec<Matrix<F>>; 3] = Default::default();
        for (l, leg) in self.legs.iter().enumerate() {
            dims[l] = leg.dims.clone();
            for (k, rows) in leg.arrows.iter().enumerate() {
                let tgt = if k + 1 < self.n {
                    leg.dims.get(k + 1).copied().unwrap_or(0)
                } else {
                    self.sink_dim
                };
                let src = leg.dims.get(k).copied().unwrap_or(0);
                let m = if rows.is_empty() || rows.iter().all(|r| r.is_empty()) {
                    Matrix::zeros(field, tgt, if rows.is_empty() { src } else { 0 })
                } else {
                    Matrix::from_i64_rows(field, rows)?
                };
                arrows[l].push(m);
            }
        }
        Ok(QuiverRep::new(field, self.n, self.sink_dim, dims, arrows)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub m: usize,
    /// Faces (or just facets); the complex is their downward closure.
    pub faces: Vec<Vec<usize>>,
}

/// `skeleton:m:i`, `simplex:m`, `void:m` (only the empty face), `empty:m` (no faces), or
/// `facets:m:1,2;3` (closure of the listed faces). Anything else is read as a file path.
pub fn parse_complex_shorthand(s: &str) -> Result<Option<SimplicialComplex>, CliError> {
    let parts: Vec<&str> = s.splitn(3, ':').collect();
    let usage = |why: &str| CliError::Usage(format!("complex `{s}`: {why}"));
    let m =
        || -> Result<usize, CliError> { parts[1].parse().map_err(|_| usage("bad vertex count")) };
    let k = match (parts[0], parts.len()) {
        ("skeleton", 3) => {
            let i: i64 = parts[2].parse().map_err(|_| usage("bad dimension"))?;
            SimplicialComplex::skeleton(m()?, i)?
        }
        ("simplex", 2) => SimplicialComplex::full(m()?)?,
        ("void", 2) => SimplicialComplex::void(m()?)?,
        ("empty", 2) => SimplicialComplex::empty(m()?)?,
        ("facets", 3) => {
            let mut faces = vec![SubsetMask::EMPTY];
            for face in parts[2].split(';').filter(|f| !f.trim().is_empty()) {
                let vs = face
                    .split(',')
                    .map(|v| v.trim().parse::<usize>().map_err(|_| usage("bad vertex")))
                    .collect::<Result<Vec<_>, _>>()?;
                faces.push(SubsetMask::from_vertices(&vs)?);
            }
            SimplicialComplex::closure(m()?, faces)?
        }
        _ => return Ok(None),
    };
    Ok(Some(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripEntry {
    pub start: i64,
    pub end: i64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrantEntry {
    pub corner: Vec<i64>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    #[serde(default = "format_one")]
    pub format: u32,
    pub vertical_strips: Vec<StripEntry>,
    pub horizontal_strips: Vec<StripEntry>,
    pub quadrants: Vec<QuadrantEntry>,
}

impl DecompositionFile {
    pub fn from_decomposition(dec: &LargeScaleDecomposition) -> Self {
        let strips = |v: &[(Interval, usize)]| -> Vec<StripEntry> {
            v.iter()
                .filter_map(|(iv, k)| match iv.end {
                    Endpoint::Finite(b) => Some(StripEntry {
                        start: iv.start,
                        end: b,
                        multiplicity: *k,
                    }),
                    Endpoint::Infinity => None,
                })
                .collect()
        };
        DecompositionFile {
            format: FORMAT,
            vertical_strips: strips(&dec.vertical_strips),
            horizontal_strips: strips(&dec.horizontal_strips),
            quadrants: dec
                .quadrants
                .iter()
                .map(|(c, k)| QuadrantEntry {
                    corner: c.coords().to_vec(),
                    multiplicity: *k,
                })
                .collect(),
        }
    }

    pub fn to_decomposition(&self) -> Result<LargeScaleDecomposition, CliError> {
        let strips = |v: &[StripEntry]| -> Vec<(Interval, usize)> {
            v.iter()
                .map(|s| (Interval::finite(s.start, s.end), s.multiplicity))
                .collect()
        };
        Ok(LargeScaleDecomposition {
            vertical_strips: strips(&self.vertical_strips),
            horizontal_strips: strips(&self.horizontal_strips),
            quadrants: self
                .quadrants
                .iter()
                .map(|q| (Multidegree::new(q.corner.clone()), q.multiplicity))
                .collect(),
        }
        .canonical())
    }
}
