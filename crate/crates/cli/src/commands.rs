use std::path::{Path, PathBuf};

use largescale::k2::{
    bifiltration, decompose, delocalize_dim, equivalent_in_dk2, intersection_rank,
    quadrant_corners, reconstruct, section_exists, single_axis_solvable, torsion_strips,
    verify_section,
};
use largescale::linalg::{image_of_map, subspace_ops, Field, Fp, Matrix, Subspace};
use largescale::localization::{localized_barcode, localized_dim, localized_rank, SubsetMask};
use largescale::presentation::{
    box_points, named_example, random_presentation, GradedPresentation, Multidegree, NamedObject,
    RandomParams, NAMED_EXAMPLES,
};
use largescale::quiver::{
    endomorphism_basis, in_leq_n, is_indecomposable, quiver_shape, to_quiver_rep,
    torsion_leg_split, try_split, GraphType, Indecomposability, QuiverRep, Split, SplitOptions,
};
use largescale::support::{
    face_ring, kdim, serre_chain, serre_step, simples, supp_complex, FaceRingRelations,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::files::{DecompositionFile, Inputs, MapFile, ModuleFile, ModuleSpec, RepFile};
use crate::output;
use crate::svg::render_svg;
use crate::verify::{self, Fixtures};
use crate::{Command, LinalgCommand, OutputArg, RepArg};

type Res = Result<(Value, bool), CliError>;

fn done(v: Value) -> Res {
    Ok((v, true))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

fn emit_module<F: Field>(module: &GradedPresentation<F>, out: &OutputArg) -> Res {
    let file = ModuleFile::from_presentation(module)?;
    let mut v = json!({ "module": serde_json::to_value(&file).expect("module files serialize") });
    if let Some(p) = &out.output {
        write_file(p, &(file.to_json() + "\n"))?;
        v["written"] = json!(p.display().to_string());
    }
    done(v)
}

fn check_len<F: Field>(module: &GradedPresentation<F>, d: &Multidegree) -> Result<(), CliError> {
    if d.len() != module.m() {
        return Err(CliError::Usage(format!(
            "degree {d} has {} coordinates, the module has {}",
            d.len(),
            module.m()
        )));
    }
    Ok(())
}

fn check_le(a: &Multidegree, b: &Multidegree) -> Result<(), CliError> {
    if !a.le(b) {
        return Err(CliError::Usage(format!("{a} is not below {b}")));
    }
    Ok(())
}

fn parse_sigma(s: &str) -> Result<SubsetMask, CliError> {
    let vs = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex `{x}` in --sigma")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetMask::from_vertices(&vs)?)
}

fn parse_params(s: Option<&str>) -> Result<RandomParams, CliError> {
    let mut p = RandomParams::default();
    for pair in s.unwrap_or("").split(',').filter(|x| !x.trim().is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--params entry `{pair}` is not key=value")))?;
        let bad = || CliError::Usage(format!("--params value `{v}` for {k} is not a count"));
        match k.trim() {
            "m" => p.m = v.trim().parse().map_err(|_| bad())?,
            "max_gens" => p.max_gens = v.trim().parse().map_err(|_| bad())?,
            "max_rels" => p.max_rels = v.trim().parse().map_err(|_| bad())?,
            "max_degree" => p.max_degree = v.trim().parse().map_err(|_| bad())?,
            other => return Err(CliError::Usage(format!("unknown --params key `{other}`"))),
        }
    }
    Ok(p)
}

/// A matrix as inline JSON rows, or a file holding them.
fn matrix_arg<F: Field>(f: &F, inputs: &mut Inputs, s: &str) -> Result<Matrix<F>, CliError> {
    let text = if s.trim_start().starts_with('[') {
        inputs.note(s.to_string());
        s.to_string()
    } else {
        inputs.read(Path::new(s))?
    };
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("matrix `{s}`: {e}")))?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(f, 0, 0));
    }
    Ok(Matrix::from_i64_rows(f, &rows)?)
}

fn span_arg<F: Field>(
    f: &F,
    inputs: &mut Inputs,
    s: &str,
    ambient: Option<usize>,
) -> Result<Subspace<F>, CliError> {
    let vectors = matrix_arg(f, inputs, s)?;
    let n = match (ambient, vectors.nrows()) {
        (Some(n), _) => n,
        (None, 0) => return Err(CliError::Usage("an empty span needs --ambient".into())),
        (None, _) => vectors.ncols(),
    };
    let cols: Vec<Vec<F::Elem>> = (0..vectors.nrows())
        .map(|i| vectors.row(i).to_vec())
        .collect();
    Ok(Subspace::from_vectors(f, n, &cols)?)
}

fn rep_arg<F: Field>(f: &F, inputs: &mut Inputs, r: &RepArg) -> Result<QuiverRep<F>, CliError> {
    match r.n {
        Some(n) => Ok(to_quiver_rep(
            &inputs.module(f, &ModuleSpec::parse(&r.rep))?,
            n,
        )?),
        None => match ModuleSpec::parse(&r.rep) {
            ModuleSpec::Path(p) => inputs.rep(f, &p),
            ModuleSpec::Named(_) => Err(CliError::Usage(
                "a named module needs -n to become a representation".into(),
            )),
        },
    }
}

fn split_json<F: Field>(rep: &QuiverRep<F>, s: &Split<F>) -> Result<Value, CliError> {
    Ok(json!({
        "first": output::rep_summary(&s.first),
        "second": output::rep_summary(&s.second),
        "verified": s.verify(rep)?,
    }))
}

fn graph_name(g: &GraphType) -> Value {
    match g {
        GraphType::Dynkin(n) => json!({ "class": "dynkin", "name": n }),
        GraphType::Euclidean(n) => json!({ "class": "euclidean", "name": n }),
        GraphType::Wild => json!({ "class": "wild", "name": Value::Null }),
    }
}

pub fn execute<F: Field>(f: &F, fp: Option<&Fp>, cmd: &Command, inputs: &mut Inputs) -> Res {
    use Command::*;
    let module = |inputs: &mut Inputs, s: &str| inputs.module(f, &ModuleSpec::parse(s));
    match cmd {
        Dims { m, hi, lo } => {
            let m = module(inputs, &m.module)?;
            let lo = lo.clone().unwrap_or_else(|| Multidegree::zero(m.m()));
            check_len(&m, hi)?;
            check_len(&m, &lo)?;
            check_le(&lo, hi)?;
            let dims = box_points(&lo, hi)
                .iter()
                .map(|d| Ok(json!({ "degree": output::degree(d), "dim": m.dim_at(d)? })))
                .collect::<Result<Vec<_>, CliError>>()?;
            done(json!({ "dims": dims }))
        }
        Transition { m, a, b } => {
            let m = module(inputs, &m.module)?;
            check_len(&m, a)?;
            check_len(&m, b)?;
            check_le(a, b)?;
            let t = m.transition_matrix(a, b)?;
            done(json!({ "rows": t.nrows(), "cols": t.ncols(), "matrix": output::matrix(&t) }))
        }
        Rank { m, a, b } => {
            let m = module(inputs, &m.module)?;
            check_len(&m, a)?;
            check_len(&m, b)?;
            check_le(a, b)?;
            done(json!({ "rank": m.rank_invariant(a, b)? }))
        }
        Bound { m } => {
            let m = module(inputs, &m.module)?;
            done(json!({ "bound": output::degree(&m.stabilization_bound()) }))
        }
        Sum { modules, out } => {
            let parts = modules
                .iter()
                .map(|s| module(inputs, s))
                .collect::<Result<Vec<_>, _>>()?;
            let m = parts[0].m();
            emit_module(&GradedPresentation::direct_sum_all(f, m, &parts)?, out)
        }
        Shift { m, by, out } => {
            let m = module(inputs, &m.module)?;
            check_len(&m, by)?;
            emit_module(&m.shift(by)?, out)
        }
        Named { name, list, out } => {
            if *list || name.is_none() {
                return done(json!({ "names": NAMED_EXAMPLES }));
            }
            let name = name.as_deref().unwrap_or_default();
            inputs.note(format!("named:{name}"));
            match named_example(f, name)? {
                NamedObject::Module(m) => emit_module(&m, out),
                NamedObject::Map(map) => {
                    let file = MapFile::from_map(&map)?;
                    let text = serde_json::to_string_pretty(&file).expect("map files serialize");
                    let mut v =
                        json!({ "map": serde_json::to_value(&file).expect("map files serialize") });
                    if let Some(p) = &out.output {
                        write_file(p, &(text + "\n"))?;
                        v["written"] = json!(p.display().to_string());
                    }
                    done(v)
                }
            }
        }
        Random { seed, params, out } => {
            let p = parse_params(params.as_deref())?;
            emit_module(&random_presentation(*seed, &p, f)?, out)
        }
        LocalizedRank { m, sigma, a, b } => {
            let m = module(inputs, &m.module)?;
            let sigma = parse_sigma(sigma)?;
            check_le(a, b)?;
            done(json!({ "sigma": output::mask(&sigma), "rank": localized_rank(&m, sigma, a, b)? }))
        }
        LocalizedDim { m, sigma, d } => {
            let m = module(inputs, &m.module)?;
            check_len(&m, d)?;
            let sigma = parse_sigma(sigma)?;
            done(json!({ "sigma": output::mask(&sigma), "dim": localized_dim(&m, sigma, d)? }))
        }
        Barcode { m, axis } => {
            let m = module(inputs, &m.module)?;
            done(json!({ "barcode": output::barcode(&localized_barcode(&m, *axis)?) }))
        }
        Strips { m } => {
            let s = torsion_strips(&module(inputs, &m.module)?)?;
            done(
                json!({ "vertical": output::bars(&s.vertical), "horizontal": output::bars(&s.horizontal) }),
            )
        }
        Bifiltration { m } => {
            let bf = bifiltration(&module(inputs, &m.module)?)?;
            done(json!({
                "bound": output::degree(&bf.bound),
                "ambient_dim": bf.ambient_dim,
                "v1": bf.v1.iter().map(output::subspace).collect::<Vec<_>>(),
                "v2": bf.v2.iter().map(output::subspace).collect::<Vec<_>>(),
                "intersection_table": bf.intersection_table()?,
                "exhaustive": bf.is_exhaustive_chain()?,
            }))
        }
        Quadrants { m } => {
            let q = quadrant_corners(&module(inputs, &m.module)?)?;
            let q: Vec<Value> = q
                .iter()
                .map(|(c, k)| json!({ "corner": output::degree(c), "multiplicity": k }))
                .collect();
            done(json!({ "quadrants": q }))
        }
        Decompose { m, svg, out } => {
            let dec = decompose(&module(inputs, &m.module)?)?;
            let mut v = json!({ "decomposition": output::decomposition(&dec) });
            if let Some(p) = svg {
                write_file(p, &render_svg(&dec))?;
                v["svg"] = json!(p.display().to_string());
            }
            if let Some(p) = &out.output {
                let file = DecompositionFile::from_decomposition(&dec);
                write_file(
                    p,
                    &(serde_json::to_string_pretty(&file).expect("serializes") + "\n"),
                )?;
                v["written"] = json!(p.display().to_string());
            }
            done(v)
        }
        Reconstruct { file, out } => {
            let dec = inputs.decomposition(file)?;
            emit_module(&reconstruct(f, &dec)?, out)
        }
        Equivalent { first, second } => {
            let (a, b) = (module(inputs, first)?, module(inputs, second)?);
            done(json!({
                "equivalent": equivalent_in_dk2(&a, &b)?,
                "first": output::decomposition(&decompose(&a)?),
                "second": output::decomposition(&decompose(&b)?),
            }))
        }
        Delocalize { m, hi } => {
            let m = module(inputs, &m.module)?;
            check_len(&m, hi)?;
            let dims = box_points(&Multidegree::zero(m.m()), hi)
                .iter()
                .map(|d| Ok(json!({ "degree": output::degree(d), "dim": delocalize_dim(&m, d)? })))
                .collect::<Result<Vec<_>, CliError>>()?;
            done(json!({ "dims": dims }))
        }
        Ibar { m, a, b, c } => {
            let m = module(inputs, &m.module)?;
            for d in [a, b, c] {
                check_len(&m, d)?;
            }
            check_le(a, c)?;
            check_le(b, c)?;
            done(json!({ "dim": intersection_rank(&m, a, b, c)? }))
        }
        SectionExists { map } => {
            let map = inputs.map(f, &ModuleSpec::parse(map))?;
            let single = json!({
                "axis1": single_axis_solvable(&map, 1)?,
                "axis2": single_axis_solvable(&map, 2)?,
            });
            let v = match section_exists(&map)? {
                Some(w) => json!({
                    "section_exists": true,
                    "verified": verify_section(&map, &w)?,
                    "witness": {
                        "pin": output::degree(&w.pin),
                        "axis1": w.axis1.iter().map(|x| output::vector(f, x)).collect::<Vec<_>>(),
                        "axis2": w.axis2.iter().map(|x| output::vector(f, x)).collect::<Vec<_>>(),
                    },
                    "single_axis": single,
                }),
                None => json!({ "section_exists": false, "single_axis": single }),
            };
            done(v)
        }
        Complex { complex } => {
            let k = inputs.complex(complex)?;
            done(json!({ "complex": output::complex(&k), "is_full": k.is_full() }))
        }
        MissingFaces { complex } => {
            let k = inputs.complex(complex)?;
            let faces: Vec<Value> = k.minimal_missing_faces().iter().map(output::mask).collect();
            done(json!({ "minimal_missing_faces": faces }))
        }
        Support { m } => {
            let k = supp_complex(&module(inputs, &m.module)?)?;
            done(json!({ "support": output::complex(&k) }))
        }
        InKernel { m, complex } => {
            let m = module(inputs, &m.module)?;
            let k = inputs.complex(complex)?;
            if k.m() != m.m() {
                return Err(CliError::Usage(format!(
                    "complex on {} vertices for a module with m = {}",
                    k.m(),
                    m.m()
                )));
            }
            let supp = supp_complex(&m)?;
            done(
                json!({ "in_kernel": supp.is_subcomplex_of(&k), "support": output::complex(&supp) }),
            )
        }
        FaceRing {
            complex,
            all_relations,
            out,
        } => {
            let k = inputs.complex(complex)?;
            let rel = if *all_relations {
                FaceRingRelations::All
            } else {
                FaceRingRelations::Minimal
            };
            emit_module(&face_ring(f, &k, rel)?, out)
        }
        Simples { complex } => {
            let k = inputs.complex(complex)?;
            let list = simples(&k)
                .iter()
                .map(|s| {
                    let realized = ModuleFile::from_presentation(&s.realize(f, k.m())?)?;
                    Ok(json!({
                        "sigma": output::mask(&s.sigma),
                        "shift": output::degree(&s.shift),
                        "module": serde_json::to_value(&realized).expect("module files serialize"),
                    }))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            done(json!({ "simples": list }))
        }
        SerreStep { complex, iterate } => {
            let k = inputs.complex(complex)?;
            if *iterate {
                let chain = serre_chain(&k);
                done(
                    json!({ "steps": chain.len() - 1, "chain": chain.iter().map(output::complex).collect::<Vec<_>>() }),
                )
            } else {
                done(json!({ "next": output::complex(&serre_step(&k)) }))
            }
        }
        Kdim { complex } => done(json!({ "kdim": kdim(&inputs.complex(complex)?) })),
        InLeqN { m, n } => done(json!({ "in_leq_n": in_leq_n(&module(inputs, &m.module)?, *n)? })),
        Quiverize { m, n, out } => {
            let rep = to_quiver_rep(&module(inputs, &m.module)?, *n)?;
            let file = RepFile::from_rep(&rep)?;
            let mut v = json!({
                "summary": output::rep_summary(&rep),
                "rep": serde_json::to_value(&file).expect("rep files serialize"),
            });
            if let Some(p) = &out.output {
                write_file(
                    p,
                    &(serde_json::to_string_pretty(&file).expect("serializes") + "\n"),
                )?;
                v["written"] = json!(p.display().to_string());
            }
            done(v)
        }
        Endo { r } => {
            let rep = rep_arg(f, inputs, r)?;
            let basis = endomorphism_basis(&rep)?;
            let elems: Vec<Value> = basis
                .basis
                .iter()
                .map(|e| Value::Array(e.iter().map(output::matrix).collect()))
                .collect();
            done(json!({ "dim": basis.dim(), "basis": elems }))
        }
        Split { r, seed } => {
            let rep = rep_arg(f, inputs, r)?;
            let opts = SplitOptions {
                seed: *seed,
                ..SplitOptions::default()
            };
            let v = match try_split(&rep, &opts)? {
                Some(s) => split_json(&rep, &s)?,
                None => Value::Null,
            };
            done(json!({ "split": v }))
        }
        Indec { r, seed } => {
            let rep = rep_arg(f, inputs, r)?;
            let opts = SplitOptions {
                seed: *seed,
                ..SplitOptions::default()
            };
            let end_dim = endomorphism_basis(&rep)?.dim();
            let v = match is_indecomposable(&rep, &opts)? {
                Indecomposability::Yes => json!({ "verdict": "yes" }),
                Indecomposability::No(s) => {
                    json!({ "verdict": "no", "split": split_json(&rep, &s)? })
                }
                Indecomposability::Unknown => json!({ "verdict": "unknown" }),
            };
            let mut v = v;
            v["end_dim"] = json!(end_dim);
            done(v)
        }
        SplitLegs { r } => {
            let rep = rep_arg(f, inputs, r)?;
            let legs = torsion_leg_split(&rep)?
                .map(|ls| ls.iter().map(output::barcode).collect::<Vec<_>>());
            done(json!({ "legs": legs }))
        }
        QuiverShape { n } => {
            let q = quiver_shape(*n)?;
            done(json!({
                "n": q.n,
                "vertices": q.vertices,
                "arrows": q.arrows,
                "graph": graph_name(&q.graph_type),
            }))
        }
        Linalg { op } => linalg(f, inputs, op),
        VerifyPaper { list, fixtures } => {
            if *list {
                return done(json!({ "checks": verify::list() }));
            }
            let fp = fp
                .ok_or_else(|| CliError::Unsupported("the checks run over a prime field".into()))?;
            let source = match fixtures {
                Some(dir) => {
                    for name in Fixtures::file_names() {
                        let p: PathBuf = dir.join(name);
                        if let Ok(bytes) = std::fs::read(&p) {
                            inputs.seen.push((p.display().to_string(), bytes));
                        }
                    }
                    Fixtures::Dir(dir.clone())
                }
                None => Fixtures::Embedded,
            };
            let (ok, report) = verify::run_all(&source, fp);
            Ok((report, ok))
        }
    }
}

fn linalg<F: Field>(f: &F, inputs: &mut Inputs, op: &LinalgCommand) -> Res {
    match op {
        LinalgCommand::Rank { matrix } => {
            done(json!({ "rank": matrix_arg(f, inputs, matrix)?.rank() }))
        }
        LinalgCommand::Kernel { matrix } => {
            done(json!({ "kernel": output::subspace(&matrix_arg(f, inputs, matrix)?.kernel()) }))
        }
        LinalgCommand::Subspaces { u, w, ambient } => {
            let u = span_arg(f, inputs, u, *ambient)?;
            let w = span_arg(f, inputs, w, *ambient)?;
            let ops = subspace_ops(&u, &w)?;
            done(
                json!({ "sum": output::subspace(&ops.sum), "intersection": output::subspace(&ops.intersection) }),
            )
        }
        LinalgCommand::Image { matrix, u } => {
            let a = matrix_arg(f, inputs, matrix)?;
            let u = span_arg(f, inputs, u, Some(a.ncols()))?;
            done(json!({ "image": output::subspace(&image_of_map(&a, &u)?) }))
        }
    }
}
