//! `audit`: checks the Mycielskian identities on each input and lists every
//! claim as pass, fail or skipped, with the numbers behind the verdict.

use rayon::prelude::*;
use serde::Serialize;
use signed_mycielski::balance::certify_balance;
use signed_mycielski::coloring::chromatic_number_budgeted;
use signed_mycielski::exactla::is_congruent_product;
use signed_mycielski::matrices::{
    adjacency, adjacency_mycielskian, congruence_factors, incidence, incidence_mycielskian,
    laplacian, laplacian_mycielskian, negative_join,
};
use signed_mycielski::mycielskian::mycielskian;
use signed_mycielski::{Error as CoreError, RationalMatrix, SignedGraph};

use crate::error::{CliError, CliResult};
use crate::report::{print_json, CommandEcho, Input};
use crate::AuditArgs;

fn is_singular(m: &RationalMatrix) -> bool {
    m.rank() < m.rows()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Claim {
    fn checked(name: &'static str, ok: bool, detail: String) -> Claim {
        Claim {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(name: &'static str, detail: String) -> Claim {
        Claim {
            name,
            status: Status::Skipped,
            detail,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FileAudit {
    pub file: String,
    pub input_digest: String,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Serialize)]
struct AuditReport {
    command: CommandEcho,
    results: Vec<FileAudit>,
}

fn counts(g: &SignedGraph, m: &SignedGraph) -> Claim {
    let (p, q, r) = (g.p(), g.q(), g.positive_count());
    let ok = m.p() == 2 * p + 1
        && m.q() == 3 * q + p
        && m.positive_count() == 3 * r + p
        && m.negative_count() == 3 * (q - r);
    Claim::checked(
        "counts",
        ok,
        format!(
            "M has {} vertices, {} edges ({} positive, {} negative)",
            m.p(),
            m.q(),
            m.positive_count(),
            m.negative_count()
        ),
    )
}

fn degrees(g: &SignedGraph, m: &SignedGraph) -> Claim {
    let p = g.p();
    let (dg, dm) = (g.degrees(), m.degrees());
    let bad = (1..=p).find(|&i| {
        let (d, o, t) = (dg.get(i), dm.get(i), dm.get(p + i));
        o.d != 2 * d.d || o.d_net != 2 * d.d_net || t.d != d.d + 1 || t.d_net != d.d_net + 1
    });
    let root = dm.get(2 * p + 1);
    let root_ok = root.d == p && root.d_net == p as i64;
    let detail = match bad {
        Some(i) => format!("degree formulas fail at vertex {i}"),
        None if !root_ok => format!("root has degree {} and net degree {}", root.d, root.d_net),
        None => "2d(v), d(v)+1 and p hold for degrees and net degrees".into(),
    };
    Claim::checked("degrees", bad.is_none() && root_ok, detail)
}

fn triangle_free(g: &SignedGraph, m: &SignedGraph) -> Claim {
    if !g.is_triangle_free() {
        return Claim::skipped("triangle-free", "input has a triangle".into());
    }
    Claim::checked(
        "triangle-free",
        m.is_triangle_free(),
        format!("M triangle-free: {}", m.is_triangle_free()),
    )
}

fn balance_iff_all_positive(g: &SignedGraph, m: &SignedGraph) -> Claim {
    let cert = certify_balance(m);
    let mut detail = format!(
        "M balanced: {}, input all-positive: {}",
        cert.is_balanced(),
        g.is_all_positive()
    );
    if let Some(w) = cert.witness() {
        detail.push_str(&format!(", negative cycle {w:?}"));
    }
    Claim::checked(
        "balance-iff-all-positive",
        cert.is_balanced() == g.is_all_positive(),
        detail,
    )
}

fn sandwich(g: &SignedGraph, m: &SignedGraph, budget: u64) -> Claim {
    let solve = |h: &SignedGraph| chromatic_number_budgeted(h, Some(budget)).map(|(n, _)| n);
    match (solve(g), solve(m)) {
        (Ok(n), Ok(nm)) => Claim::checked(
            "chromatic-sandwich",
            n <= nm && nm <= n + 1,
            format!(
                "chi = {n}, chi(M) = {nm}, difference {}",
                nm as i64 - n as i64
            ),
        ),
        (Err(CoreError::BudgetExhausted { lower_bound, .. }), _)
        | (_, Err(CoreError::BudgetExhausted { lower_bound, .. })) => Claim::skipped(
            "chromatic-sandwich",
            format!("search budget exhausted (lower bound {lower_bound})"),
        ),
        (Err(e), _) | (_, Err(e)) => Claim::checked("chromatic-sandwich", false, e.to_string()),
    }
}

fn congruence(g: &SignedGraph, inject_fault: bool) -> Claim {
    let (p, mut b) = congruence_factors(g);
    if inject_fault {
        // a nonzero root-root entry survives P·B·Pᵗ unchanged
        let mut bump = vec![0; b.rows()];
        bump[b.rows() - 1] = 1;
        b = b
            .try_add(&RationalMatrix::diagonal(&bump))
            .expect("same shape");
    }
    let ok = is_congruent_product(&p, &b, &adjacency_mycielskian(g)).unwrap_or(false);
    Claim::checked(
        "congruence",
        ok,
        format!(
            "P·B·Pᵗ = A_M: {ok}{}",
            if inject_fault {
                " (fault injected)"
            } else {
                ""
            }
        ),
    )
}

fn rank_and_inertia(g: &SignedGraph) -> Vec<Claim> {
    let am = adjacency_mycielskian(g);
    let a = adjacency(g);
    let join = negative_join(g);
    let (rm, ra, rj) = (am.rank(), a.rank(), join.rank());
    let rank = Claim::checked(
        "rank-additivity",
        rm == ra + rj,
        format!("r(A_M) = {rm}, r(A) + r(A_t-) = {ra} + {rj}"),
    );
    let inertia = match (am.inertia(), a.inertia(), join.inertia()) {
        (Ok(im), Ok(ia), Ok(ij)) => {
            // the lower block of the congruent form is -A_t-, so the
            // sign counts of the join enter swapped
            let expected = ia + ij.negated();
            Claim::checked(
                "inertia-additivity",
                im == expected,
                format!(
                    "A_M ({}, {}, {}); A ({}, {}, {}); A_t- ({}, {}, {}); \
                     n+(A_M) = n+(A) + n-(A_t-), n-(A_M) = n-(A) + n+(A_t-)",
                    im.n_plus,
                    im.n_minus,
                    im.n_zero,
                    ia.n_plus,
                    ia.n_minus,
                    ia.n_zero,
                    ij.n_plus,
                    ij.n_minus,
                    ij.n_zero
                ),
            )
        }
        _ => Claim::checked("inertia-additivity", false, "matrix not symmetric".into()),
    };
    vec![rank, inertia]
}

fn incidence_laplacian(g: &SignedGraph) -> Claim {
    let gram = |h: RationalMatrix| h.multiply(&h.transpose()).expect("shapes agree");
    let base = gram(incidence(g)) == laplacian(g);
    let myc = gram(incidence_mycielskian(g)) == laplacian_mycielskian(g);
    Claim::checked(
        "incidence-laplacian",
        base && myc,
        format!("H·Hᵗ = L: {base}, H_M·H_Mᵗ = L_M: {myc}"),
    )
}

fn laplacian_singularity(g: &SignedGraph) -> Claim {
    if !g.is_connected() {
        return Claim::skipped("laplacian-singularity", "input is disconnected".into());
    }
    let balanced = certify_balance(g).is_balanced();
    let l = is_singular(&laplacian(g));
    let lm = is_singular(&laplacian_mycielskian(g));
    let ok = l == balanced && lm == g.is_all_positive();
    Claim::checked(
        "laplacian-singularity",
        ok,
        format!("L singular: {l}, balanced: {balanced}; L_M singular: {lm}"),
    )
}

pub fn audit_graph(g: &SignedGraph, budget: u64, inject_fault: bool) -> Vec<Claim> {
    let m = mycielskian(g).0;
    let mut claims = vec![
        counts(g, &m),
        degrees(g, &m),
        triangle_free(g, &m),
        balance_iff_all_positive(g, &m),
        sandwich(g, &m, budget),
        congruence(g, inject_fault),
    ];
    claims.extend(rank_and_inertia(g));
    claims.push(incidence_laplacian(g));
    claims.push(laplacian_singularity(g));
    claims
}

pub fn run(args: &AuditArgs) -> CliResult<()> {
    if args.jobs == 0 {
        return Err(CliError::Input("--jobs must be at least 1".into()));
    }
    let inputs = args
        .files
        .iter()
        .map(|f| Input::load(f))
        .collect::<CliResult<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let results: Vec<FileAudit> = pool.install(|| {
        inputs
            .par_iter()
            .map(|input| FileAudit {
                file: input.path.display().to_string(),
                input_digest: input.digest.clone(),
                claims: audit_graph(&input.graph, args.budget, args.inject_fault),
            })
            .collect()
    });
    let failed = results
        .iter()
        .flat_map(|r| &r.claims)
        .filter(|c| c.status == Status::Fail)
        .count();
    if args.json {
        let files: Vec<String> = args.files.iter().map(|f| f.display().to_string()).collect();
        print_json(&AuditReport {
            command: CommandEcho::new("audit")
                .arg("files", files)
                .arg("budget", args.budget)
                .arg("inject_fault", args.inject_fault),
            results,
        });
    } else {
        for r in &results {
            println!("{} {}", r.file, r.input_digest);
            for c in &r.claims {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("  {status} {}: {}", c.name, c.detail);
            }
        }
    }
    if failed > 0 {
        return Err(CliError::AuditFailed { failed });
    }
    Ok(())
}
