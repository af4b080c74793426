//! Command-line front end: parse input documents, dispatch to the library,
//! emit one JSON result document, optionally cross-checked by an oracle.
//!
//! Exit codes: 0 on success, 1 on any validation or usage failure
//! (diagnostics on stderr), 2 when `--verify` finds a mismatch beyond
//! tolerance.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::containment::{circle_containment, rect_containment, rect_containment_counts};
use crate::empty_circle::largest_empty_circle;
use crate::gen;
use crate::geom::{Circle, HyperRect, Point};
use crate::hyperrect::{largest_empty_hyper_rect, union_volume, AspectRatio};
use crate::io::{InputDocument, NfaDoc, OutputDocument, Verification};
use crate::nfa::{max_weight_subsequence, Nfa, SequenceInput, STRICT_EPS};
use crate::oracle::{
    oracle_circle_containment_pairs, oracle_empty_circle, oracle_nfa_dp,
    oracle_rect_containment_pairs, oracle_union_volume,
};
use crate::{empty_circle, Error, Result};

#[derive(Parser)]
#[command(
    name = "geomsweep",
    version,
    about = "Sweep-line geometric analysis: empty regions, union measures, containment, NFA subsequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input document path.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// Output path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Cross-check the result against the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Append wall-clock timing to the output document.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Largest empty circle inside a container circle (input: points2d).
    EmptyCircle {
        #[command(flatten)]
        io: IoArgs,
        /// Container circle as `cx,cy,r`.
        #[arg(long, value_name = "CSV")]
        container: String,
        /// Radius tolerance; defaults to 1e-7 * r.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Area of a union of circles (input: circles).
    UnionAreaCircles {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Area of a union of simple polygons (input: polygons).
    UnionAreaPolygons {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Volume of a union of axis-aligned boxes (input: boxes).
    UnionVolume {
        #[command(flatten)]
        io: IoArgs,
        /// Expected dimension; defaults to the document's.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Largest empty box with a fixed aspect ratio (input: points2d, or
    /// nfa-instance points for dimensions above two).
    EmptyRect {
        #[command(flatten)]
        io: IoArgs,
        /// Container box as `lo_1,..,lo_d,hi_1,..,hi_d`.
        #[arg(long, value_name = "CSV")]
        container: String,
        /// Aspect factors `f_1,..,f_d` (f_1 = 1); defaults to all ones.
        #[arg(long, value_name = "CSV")]
        ratio: Option<String>,
        /// Length tolerance; defaults to 1e-7 * (largest fitting l1).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Circle containment report for a laminar family (input: circles).
    ContainCircles {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Box containment witnesses (input: boxes).
    ContainRects {
        #[command(flatten)]
        io: IoArgs,
        /// Expected dimension; defaults to the document's.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Per-box container/contained counts (input: boxes).
    ContainCounts {
        #[command(flatten)]
        io: IoArgs,
        /// Expected dimension; defaults to the document's.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Maximum-weight subsequence accepted by an NFA (input: nfa-instance).
    NfaSubseq {
        #[command(flatten)]
        io: IoArgs,
        /// Automaton document; overrides any inline automaton.
        #[arg(long, value_name = "PATH")]
        nfa: Option<PathBuf>,
    },
    /// Longest strictly increasing subsequence (input: nfa-instance, d = 1).
    PresetLis {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Longest strictly alternating subsequence (input: nfa-instance, d = 1).
    PresetAlt {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Generate a random input document from a seed.
    Gen {
        /// RNG seed; same seed, same document.
        #[arg(long)]
        seed: u64,
        /// What to generate.
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Number of objects.
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Dimension, where it applies.
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Output path; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Points uniform in the disk of radius 50 at the origin.
    #[value(name = "points2d")]
    Points2d,
    /// A laminar circle family.
    #[value(name = "circles")]
    Circles,
    /// Random boxes, partly nested, a few duplicated.
    #[value(name = "boxes")]
    Boxes,
    /// A weighted point sequence with a random automaton inline.
    #[value(name = "nfa-instance")]
    NfaInstance,
}

/// Entry point for the binary.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

/// Parses `argv` and executes one subcommand, returning the process exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too; they are not failures.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn read_doc(path: &PathBuf) -> Result<InputDocument> {
    InputDocument::parse(&fs::read_to_string(path)?)
}

fn parse_csv(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("not a number in CSV list: \"{t}\"")))
        })
        .collect()
}

fn emit(io: &IoArgs, mut doc: OutputDocument, started: Instant) -> Result<i32> {
    if io.timing {
        doc.timing_ms = Some(started.elapsed().as_millis() as u64);
    }
    let exit = match &doc.verification {
        Some(v) if !v.matches => 2,
        _ => 0,
    };
    let line = format!("{}\n", doc.to_json());
    match &io.out {
        Some(path) => fs::write(path, line)?,
        None => print!("{line}"),
    }
    Ok(exit)
}

fn containment_report_json(report: &crate::containment::ContainmentReport) -> serde_json::Value {
    json!({
        "items": report
            .items
            .iter()
            .map(|s| json!({
                "contained_by": s.contained_by,
                "contains_another": s.contains_another,
            }))
            .collect::<Vec<_>>(),
        "contained_ids": report.contained_ids(),
    })
}

fn subsequence_json(r: &crate::nfa::SubsequenceResult) -> serde_json::Value {
    json!({
        "total_weight": r.total_weight,
        "indices": r.indices,
        "states": r.states,
    })
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::EmptyCircle { io, container, tol } => {
            let started = Instant::now();
            let c = parse_csv(&container)?;
            if c.len() != 3 {
                return Err(Error::invalid("--container needs exactly cx,cy,r"));
            }
            let container = Circle::new(c[0], c[1], c[2])?;
            let tol = tol.unwrap_or(1e-7 * container.r());
            let points = read_doc(&io.input)?.into_points2d()?;
            let result = largest_empty_circle(&points, &container, tol)?;

            let mut doc = OutputDocument::new(
                "empty-circle",
                json!({
                    "radius": result.radius,
                    "center": result.center,
                    "iterations": result.iterations,
                }),
            );
            if io.verify {
                let grid_res = 400;
                let (oracle_radius, _) = oracle_empty_circle(&points, &container, grid_res);
                let pitch = 2.0 * container.r() / grid_res as f64;
                let empty_ok = points.iter().all(|p| {
                    let d = ((p[0] - result.center[0]).powi(2) + (p[1] - result.center[1]).powi(2))
                        .sqrt();
                    d >= result.radius - 1e-9
                });
                let inside_ok = {
                    let d = ((result.center[0] - container.cx()).powi(2)
                        + (result.center[1] - container.cy()).powi(2))
                    .sqrt();
                    d <= container.r() - result.radius + 1e-9
                };
                let in_band = result.radius >= oracle_radius - pitch
                    && result.radius <= oracle_radius + tol + pitch;
                doc.verification = Some(Verification {
                    method: "grid-search oracle".into(),
                    matches: empty_ok && inside_ok && in_band,
                    detail: format!(
                        "fast radius {} vs oracle {oracle_radius} (pitch {pitch})",
                        result.radius
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::UnionAreaCircles { io } => {
            let started = Instant::now();
            if io.verify {
                return Err(Error::invalid(
                    "--verify is not available for union-area-circles",
                ));
            }
            let circles = read_doc(&io.input)?.into_circles()?;
            let area = empty_circle::union_area_circles(&circles);
            emit(
                &io,
                OutputDocument::new("union-area-circles", json!({ "area": area })),
                started,
            )
        }

        Command::UnionAreaPolygons { io } => {
            let started = Instant::now();
            if io.verify {
                return Err(Error::invalid(
                    "--verify is not available for union-area-polygons",
                ));
            }
            let polys = read_doc(&io.input)?.into_polygons()?;
            let area = empty_circle::union_area_polygons(&polys)?;
            emit(
                &io,
                OutputDocument::new("union-area-polygons", json!({ "area": area })),
                started,
            )
        }

        Command::UnionVolume { io, d } => {
            let started = Instant::now();
            let (doc_d, boxes) = read_doc(&io.input)?.into_boxes()?;
            let d = d.unwrap_or(doc_d);
            let volume = union_volume(&boxes, d)?;
            let mut doc = OutputDocument::new("union-volume", json!({ "volume": volume, "d": d }));
            if io.verify {
                let oracle = oracle_union_volume(&boxes, d)?;
                let matches = (volume - oracle).abs() <= 1e-9 * oracle.abs().max(1e-300);
                doc.verification = Some(Verification {
                    method: "compressed-grid oracle".into(),
                    matches,
                    detail: format!("fast {volume} vs oracle {oracle}"),
                });
            }
            emit(&io, doc, started)
        }

        Command::EmptyRect {
            io,
            container,
            ratio,
            tol,
        } => {
            let started = Instant::now();
            if io.verify {
                return Err(Error::invalid("--verify is not available for empty-rect"));
            }
            let c = parse_csv(&container)?;
            if c.is_empty() || c.len() % 2 != 0 {
                return Err(Error::invalid(
                    "--container needs lo_1,..,lo_d,hi_1,..,hi_d",
                ));
            }
            let d = c.len() / 2;
            let container = HyperRect::new(c[..d].to_vec(), c[d..].to_vec())?;
            let ratio = match ratio {
                Some(text) => AspectRatio::new(parse_csv(&text)?)?,
                None => AspectRatio::uniform(d),
            };
            let points: Vec<Point> = match read_doc(&io.input)? {
                InputDocument::Points2d { .. } if d != 2 => {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: 2,
                    });
                }
                InputDocument::Points2d { points } => points
                    .into_iter()
                    .map(|p| Point::new(p.to_vec()))
                    .collect::<Result<_>>()?,
                other => {
                    let (seq, _) = other.into_sequence()?;
                    if seq.d() != d {
                        return Err(Error::DimensionMismatch {
                            expected: d,
                            got: seq.d(),
                        });
                    }
                    seq.points()
                        .iter()
                        .map(|p| Point::new(p.coords.clone()))
                        .collect::<Result<_>>()?
                }
            };
            let max_l1 = (0..d)
                .map(|j| container.extent(j) / ratio.factors()[j])
                .fold(f64::INFINITY, f64::min);
            let tol = tol.unwrap_or((1e-7 * max_l1).max(1e-300));
            let result = largest_empty_hyper_rect(&points, &container, &ratio, tol)?;
            emit(
                &io,
                OutputDocument::new(
                    "empty-rect",
                    json!({
                        "l1": result.l1,
                        "lengths": result.lengths,
                        "anchor": result.anchor,
                        "iterations": result.iterations,
                    }),
                ),
                started,
            )
        }

        Command::ContainCircles { io } => {
            let started = Instant::now();
            let circles = read_doc(&io.input)?.into_circles()?;
            let report = circle_containment(&circles);
            let mut doc = OutputDocument::new("contain-circles", containment_report_json(&report));
            if io.verify {
                let pairs = oracle_circle_containment_pairs(&circles);
                let mut oracle_ids: Vec<usize> = pairs.iter().map(|&(inner, _)| inner).collect();
                oracle_ids.sort_unstable();
                oracle_ids.dedup();
                let witnesses_ok = report.items.iter().enumerate().all(|(i, s)| {
                    s.contained_by
                        .is_none_or(|j| circles[j].contains_circle(&circles[i], crate::EPS_GEOM))
                });
                let matches = report.contained_ids() == oracle_ids && witnesses_ok;
                doc.verification = Some(Verification {
                    method: "pairwise oracle".into(),
                    matches,
                    detail: format!(
                        "{} contained circles vs oracle {}",
                        report.contained_ids().len(),
                        oracle_ids.len()
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::ContainRects { io, d } => {
            let started = Instant::now();
            let (doc_d, boxes) = read_doc(&io.input)?.into_boxes()?;
            let d = d.unwrap_or(doc_d);
            let report = rect_containment(&boxes, d)?;
            let mut doc = OutputDocument::new("contain-rects", containment_report_json(&report));
            if io.verify {
                let pairs = oracle_rect_containment_pairs(&boxes);
                let mut oracle_ids: Vec<usize> = pairs.iter().map(|&(inner, _)| inner).collect();
                oracle_ids.sort_unstable();
                oracle_ids.dedup();
                let witnesses_ok = report.items.iter().enumerate().all(|(i, s)| {
                    s.contained_by
                        .is_none_or(|j| boxes[j].contains_rect(&boxes[i]))
                });
                let matches = report.contained_ids() == oracle_ids && witnesses_ok;
                doc.verification = Some(Verification {
                    method: "pairwise oracle".into(),
                    matches,
                    detail: format!(
                        "{} contained boxes vs oracle {}",
                        report.contained_ids().len(),
                        oracle_ids.len()
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::ContainCounts { io, d } => {
            let started = Instant::now();
            let (doc_d, boxes) = read_doc(&io.input)?.into_boxes()?;
            let d = d.unwrap_or(doc_d);
            let counts = rect_containment_counts(&boxes, d)?;
            let mut doc = OutputDocument::new(
                "contain-counts",
                json!({
                    "num_containers": counts.num_containers,
                    "num_contained": counts.num_contained,
                }),
            );
            if io.verify {
                let pairs = oracle_rect_containment_pairs(&boxes);
                let mut containers = vec![0usize; boxes.len()];
                let mut contained = vec![0usize; boxes.len()];
                for &(inner, outer) in &pairs {
                    containers[inner] += 1;
                    contained[outer] += 1;
                }
                let matches =
                    counts.num_containers == containers && counts.num_contained == contained;
                doc.verification = Some(Verification {
                    method: "pairwise oracle".into(),
                    matches,
                    detail: format!("{} ordered pairs", pairs.len()),
                });
            }
            emit(&io, doc, started)
        }

        Command::NfaSubseq { io, nfa } => {
            let started = Instant::now();
            let (input, inline) = read_doc(&io.input)?.into_sequence()?;
            let automaton: Nfa = match nfa {
                Some(path) => {
                    let doc: NfaDoc = serde_json::from_str(&fs::read_to_string(&path)?)?;
                    doc.to_nfa()
                }
                None => inline.ok_or_else(|| {
                    Error::invalid("no automaton: pass --nfa PATH or embed \"nfa\" in the input")
                })?,
            };
            let result = max_weight_subsequence(&input, &automaton)?;
            let mut doc = OutputDocument::new("nfa-subseq", subsequence_json(&result));
            if io.verify {
                let oracle = oracle_nfa_dp(&input, &automaton)?;
                doc.verification = Some(Verification {
                    method: "direct DP oracle".into(),
                    matches: result.total_weight == oracle.total_weight,
                    detail: format!(
                        "fast {:?} vs oracle {:?}",
                        result.total_weight, oracle.total_weight
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::PresetLis { io } => {
            let started = Instant::now();
            let (seq, _) = read_doc(&io.input)?.into_sequence()?;
            if seq.d() != 1 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    got: seq.d(),
                });
            }
            let values: Vec<f64> = seq.points().iter().map(|p| p.coords[0]).collect();
            let result = crate::nfa::preset_lis(&values)?;
            let mut doc = OutputDocument::new("preset-lis", subsequence_json(&result));
            if io.verify {
                let input = SequenceInput::from_values(&values)?;
                let oracle = oracle_nfa_dp(&input, &Nfa::lis(STRICT_EPS))?;
                doc.verification = Some(Verification {
                    method: "direct DP oracle".into(),
                    matches: result.total_weight == oracle.total_weight,
                    detail: format!(
                        "fast {:?} vs oracle {:?}",
                        result.total_weight, oracle.total_weight
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::PresetAlt { io } => {
            let started = Instant::now();
            let (seq, _) = read_doc(&io.input)?.into_sequence()?;
            if seq.d() != 1 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    got: seq.d(),
                });
            }
            let values: Vec<f64> = seq.points().iter().map(|p| p.coords[0]).collect();
            let result = crate::nfa::preset_alternating(&values)?;
            let mut doc = OutputDocument::new("preset-alt", subsequence_json(&result));
            if io.verify {
                let input = SequenceInput::from_values(&values)?;
                let oracle = oracle_nfa_dp(&input, &Nfa::alternating(STRICT_EPS))?;
                doc.verification = Some(Verification {
                    method: "direct DP oracle".into(),
                    matches: result.total_weight == oracle.total_weight,
                    detail: format!(
                        "fast {:?} vs oracle {:?}",
                        result.total_weight, oracle.total_weight
                    ),
                });
            }
            emit(&io, doc, started)
        }

        Command::Gen {
            seed,
            kind,
            n,
            d,
            out,
        } => {
            let doc = match kind {
                GenKind::Points2d => {
                    let container = Circle::new(0.0, 0.0, 50.0).expect("static circle");
                    InputDocument::Points2d {
                        points: gen::points_in_circle(seed, n, &container),
                    }
                }
                GenKind::Circles => InputDocument::Circles {
                    circles: gen::laminar_circles(seed, n)
                        .iter()
                        .map(|c| [c.cx(), c.cy(), c.r()])
                        .collect(),
                },
                GenKind::Boxes => InputDocument::Boxes {
                    d,
                    boxes: gen::boxes(seed, n, d, 100.0, 30.0)
                        .iter()
                        .map(|b| crate::io::BoxCorners {
                            lo: b.lo().to_vec(),
                            hi: b.hi().to_vec(),
                        })
                        .collect(),
                },
                GenKind::NfaInstance => {
                    let (input, nfa) = gen::nfa_instance(seed, n, d, 4, 8);
                    InputDocument::NfaInstance {
                        d,
                        points: input
                            .points()
                            .iter()
                            .map(|p| crate::io::SequencePointDoc {
                                coords: p.coords.clone(),
                                weight: p.weight,
                            })
                            .collect(),
                        nfa: Some(NfaDoc::from_nfa(&nfa)),
                    }
                }
            };
            let line = format!("{}\n", doc.to_json());
            match out {
                Some(path) => fs::write(path, line)?,
                None => print!("{line}"),
            }
            Ok(0)
        }
    }
}
