use std::path::Path;

use serde::Serialize;
use signed_mycielski::balance::certify_balance;
use signed_mycielski::coloring::{chromatic_number_budgeted, chromatic_number_parallel};
use signed_mycielski::graph::{generate as generate_graph, parse_pattern, GraphKind, VertexDegree};
use signed_mycielski::matrices;
use signed_mycielski::mycielskian::{
    balanced_mycielskian, balanced_mycielskian_with, mycielskian as build_mycielskian, tower,
    LabelingSidecar,
};
use signed_mycielski::{
    Error as CoreError, Inertia, MycielskianLabeling, RationalMatrix, Sign, SignedGraph,
    SwitchingFunction,
};

use crate::error::{CliError, CliResult};
use crate::report::{join, print_json, CommandEcho, Input, Report};
use crate::{
    ChromaticArgs, FileArgs, GenerateArgs, GenerateKind, InertiaArgs, MatrixArgs, MatrixKind,
    MycielskianArgs, Target,
};

fn path_arg(path: &Path) -> String {
    path.display().to_string()
}

#[derive(Serialize)]
struct InfoResult {
    p: usize,
    q: usize,
    positive: usize,
    negative: usize,
    connected: bool,
    triangle_free: bool,
    degrees: Vec<VertexDegree>,
}

pub fn info(args: &FileArgs) -> CliResult<()> {
    let input = Input::load(&args.file)?;
    let g = &input.graph;
    let result = InfoResult {
        p: g.p(),
        q: g.q(),
        positive: g.positive_count(),
        negative: g.negative_count(),
        connected: g.is_connected(),
        triangle_free: g.is_triangle_free(),
        degrees: g.degrees().vertices,
    };
    if args.json {
        print_json(&Report {
            command: CommandEcho::new("info").arg("file", path_arg(&input.path)),
            input_digest: input.digest,
            result,
        });
        return Ok(());
    }
    println!("p {}", result.p);
    println!("q {}", result.q);
    println!("positive {}", result.positive);
    println!("negative {}", result.negative);
    println!("connected {}", result.connected);
    println!("triangle-free {}", result.triangle_free);
    println!("vertex d d+ d- net");
    for (i, d) in result.degrees.iter().enumerate() {
        println!("{} {} {} {} {}", i + 1, d.d, d.d_plus, d.d_minus, d.d_net);
    }
    Ok(())
}

#[derive(Serialize)]
struct MycielskianResult {
    p: usize,
    q: usize,
    balanced_variant: bool,
    /// Switching taking the output to all-positive (balanced variant only).
    switching: Option<Vec<Sign>>,
    labeling: LabelingSidecar,
    output: Option<String>,
    edge_list: String,
}

fn sidecar_path(out: &Path) -> std::path::PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".labeling.json");
    name.into()
}

pub fn mycielskian(args: &MycielskianArgs) -> CliResult<()> {
    let input = Input::load(&args.input.file)?;
    let g = &input.graph;
    let lab = MycielskianLabeling::new(g.p());
    let (m, zb) = if args.balanced {
        let (m, zb) = match &args.switching {
            Some(list) => {
                let zeta = SwitchingFunction::parse(list)?;
                if zeta.len() != g.p() {
                    return Err(CoreError::LengthMismatch {
                        expected: g.p(),
                        actual: zeta.len(),
                    }
                    .into());
                }
                balanced_mycielskian_with(g, &zeta)?
            }
            None => balanced_mycielskian(g)?,
        };
        (m, Some(zb.values().to_vec()))
    } else {
        (build_mycielskian(g).0, None)
    };
    let edge_list = m.to_edge_list();
    if let Some(out) = &args.output {
        std::fs::write(out, &edge_list)?;
        let sidecar = serde_json::to_string_pretty(&lab.sidecar()).expect("labeling serializes");
        std::fs::write(sidecar_path(out), sidecar + "\n")?;
    }
    let result = MycielskianResult {
        p: m.p(),
        q: m.q(),
        balanced_variant: args.balanced,
        switching: zb,
        labeling: lab.sidecar(),
        output: args.output.as_deref().map(path_arg),
        edge_list,
    };
    if args.input.json {
        print_json(&Report {
            command: CommandEcho::new("mycielskian")
                .arg("file", path_arg(&input.path))
                .arg("balanced", args.balanced)
                .arg("switching", &args.switching)
                .arg("output", &result.output),
            input_digest: input.digest,
            result,
        });
    } else if let Some(out) = &result.output {
        println!("wrote {out} (p {}, q {})", result.p, result.q);
        println!("wrote {}", sidecar_path(Path::new(out)).display());
    } else {
        print!("{}", result.edge_list);
    }
    Ok(())
}

pub fn balance(args: &FileArgs) -> CliResult<()> {
    let input = Input::load(&args.file)?;
    let cert = certify_balance(&input.graph);
    if args.json {
        print_json(&Report {
            command: CommandEcho::new("balance").arg("file", path_arg(&input.path)),
            input_digest: input.digest,
            result: cert.report(),
        });
        return Ok(());
    }
    println!("balanced {}", cert.is_balanced());
    if let (Some(parts), Some(z)) = (cert.bipartition(), cert.switching()) {
        let (a, b) = parts.parts();
        println!("parts {} | {}", join(&a), join(&b));
        println!("switching {}", join(z.values()));
    }
    if let Some(w) = cert.witness() {
        println!("negative-cycle {}", join(w));
    }
    Ok(())
}

#[derive(Serialize)]
struct ChromaticResult {
    status: &'static str,
    chromatic_number: Option<usize>,
    lower_bound: Option<usize>,
    certificate: Option<Vec<i64>>,
}

pub fn chromatic(args: &ChromaticArgs) -> CliResult<()> {
    let input = Input::load(&args.input.file)?;
    let g = &input.graph;
    let solved = if args.parallel {
        Ok(chromatic_number_parallel(g))
    } else {
        chromatic_number_budgeted(g, args.budget)
    };
    let (result, failure) = match solved {
        Ok((n, c)) => (
            ChromaticResult {
                status: "solved",
                chromatic_number: Some(n),
                lower_bound: None,
                certificate: args.certificate.then_some(c.colors),
            },
            None,
        ),
        Err(CoreError::BudgetExhausted {
            budget,
            lower_bound,
        }) => (
            ChromaticResult {
                status: "budget_exhausted",
                chromatic_number: None,
                lower_bound: Some(lower_bound),
                certificate: None,
            },
            Some(CliError::Budget {
                budget,
                lower_bound,
            }),
        ),
        Err(e) => return Err(e.into()),
    };
    if args.input.json {
        print_json(&Report {
            command: CommandEcho::new("chromatic")
                .arg("file", path_arg(&input.path))
                .arg("certificate", args.certificate)
                .arg("budget", args.budget)
                .arg("parallel", args.parallel),
            input_digest: input.digest,
            result,
        });
    } else {
        match (result.chromatic_number, result.lower_bound) {
            (Some(n), _) => println!("{n}"),
            (None, Some(lb)) => println!("unknown >= {lb}"),
            (None, None) => unreachable!("either solved or bounded"),
        }
        if let Some(c) = &result.certificate {
            println!("{}", join(c));
        }
    }
    failure.map_or(Ok(()), Err)
}

fn select_matrix(g: &SignedGraph, kind: MatrixKind, of: Target) -> RationalMatrix {
    match (of, kind) {
        (Target::Input, MatrixKind::Adjacency) => matrices::adjacency(g),
        (Target::Input, MatrixKind::Incidence) => matrices::incidence(g),
        (Target::Input, MatrixKind::Laplacian) => matrices::laplacian(g),
        (Target::Input, MatrixKind::Degree) => matrices::degree_matrix(g),
        (Target::Input, MatrixKind::Negjoin) => matrices::negative_join(g),
        (Target::Mycielskian, MatrixKind::Adjacency) => matrices::adjacency_mycielskian(g),
        (Target::Mycielskian, MatrixKind::Incidence) => matrices::incidence_mycielskian(g),
        (Target::Mycielskian, MatrixKind::Laplacian) => matrices::laplacian_mycielskian(g),
        (Target::Mycielskian, MatrixKind::Degree) => matrices::degree_matrix_mycielskian(g),
        (Target::Mycielskian, MatrixKind::Negjoin) => {
            matrices::negative_join(&build_mycielskian(g).0)
        }
    }
}

#[derive(Serialize)]
struct MatrixResult {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

pub fn matrix(args: &MatrixArgs) -> CliResult<()> {
    let input = Input::load(&args.input.file)?;
    let m = select_matrix(&input.graph, args.kind, args.of);
    let entries = m.to_i64_rows().expect("graph matrices are integral");
    if args.input.json {
        print_json(&Report {
            command: CommandEcho::new("matrix")
                .arg("file", path_arg(&input.path))
                .arg("kind", args.kind)
                .arg("of", args.of),
            input_digest: input.digest,
            result: MatrixResult {
                rows: m.rows(),
                cols: m.cols(),
                entries,
            },
        });
    } else {
        for row in &entries {
            println!("{}", join(row));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct InertiaResult {
    order: usize,
    rank: usize,
    #[serde(flatten)]
    inertia: Inertia,
}

pub fn inertia(args: &InertiaArgs) -> CliResult<()> {
    let input = Input::load(&args.input.file)?;
    let m = select_matrix(&input.graph, args.kind, args.of);
    let inertia = m.inertia()?;
    let result = InertiaResult {
        order: m.rows(),
        rank: m.rank(),
        inertia,
    };
    if args.input.json {
        print_json(&Report {
            command: CommandEcho::new("inertia")
                .arg("file", path_arg(&input.path))
                .arg("kind", args.kind)
                .arg("of", args.of),
            input_digest: input.digest,
            result,
        });
    } else {
        println!(
            "{} {} {} {}",
            result.rank, inertia.n_plus, inertia.n_minus, inertia.n_zero
        );
    }
    Ok(())
}

fn required<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Input(format!("generate {kind} needs --{flag}")))
}

pub fn generate(args: &GenerateArgs) -> CliResult<()> {
    let pattern = || -> CliResult<Vec<Sign>> {
        let text = args
            .pattern
            .as_deref()
            .ok_or_else(|| CliError::Input("this kind needs --pattern".into()))?;
        Ok(parse_pattern(text)?)
    };
    let g = match args.kind {
        GenerateKind::Path => generate_graph(
            &GraphKind::Path {
                pattern: pattern()?,
            },
            args.seed,
        )?,
        GenerateKind::Cycle => generate_graph(
            &GraphKind::Cycle {
                pattern: pattern()?,
            },
            args.seed,
        )?,
        GenerateKind::Star => generate_graph(
            &GraphKind::Star {
                pattern: pattern()?,
            },
            args.seed,
        )?,
        GenerateKind::Complete => {
            let sign = Sign::parse(&args.sign)
                .ok_or_else(|| CliError::Input(format!("bad sign '{}'", args.sign)))?;
            let p = required(args.p, "p", "complete")?;
            generate_graph(&GraphKind::Complete { p, sign }, args.seed)?
        }
        GenerateKind::Random => {
            let p = required(args.p, "p", "random")?;
            for (name, x) in [("edge-prob", args.edge_prob), ("neg-prob", args.neg_prob)] {
                if !(0.0..=1.0).contains(&x) {
                    return Err(CliError::Input(format!("--{name} must lie in [0, 1]")));
                }
            }
            generate_graph(
                &GraphKind::Random {
                    p,
                    edge_prob: args.edge_prob,
                    neg_prob: args.neg_prob,
                },
                args.seed,
            )?
        }
        GenerateKind::Tower => {
            let level = required(args.level, "level", "tower")?;
            if level == 0 {
                return Err(CliError::Input("tower levels start at 1".into()));
            }
            tower(level).pop().expect("tower(level) has level entries")
        }
    };
    let text = g.to_edge_list();
    match &args.output {
        Some(out) => std::fs::write(out, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
