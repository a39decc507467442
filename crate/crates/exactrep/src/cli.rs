//! Command-line front end: dimension and character tables,
//! decomposition multiplicities, and the verification suites, with
//! optional JSON/CSV artifacts and a content-addressed result cache.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on malformed
//! input. Identical invocations produce byte-identical table and JSON
//! output (the envelope's `meta.elapsed_ms` field is pinned to 0 for
//! that reason); `EXACTREP_WORKERS` only schedules the verify suites
//! and never changes results.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num::BigInt;
use serde_json::{json, Value};

use crate::cache::ResultCache;
use crate::shapes::Partition;
use crate::verify::{Bounds, VerifyReport};
use crate::{diagram, glnrep, hecke, schur, symgroup, verify, weyl};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "exactrep",
    version,
    about = "Exact combinatorial representation theory: dimensions, characters, decompositions, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write a JSON envelope {"request", "result", "meta"} to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the table as RFC 4180 CSV (header first) to this path.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Cache directory for computed results (content-addressed).
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Disable the result cache even when --cache-dir is given.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible dimensions.
    Dim {
        #[command(subcommand)]
        target: DimCmd,
    },
    /// Character tables.
    Char {
        #[command(subcommand)]
        target: CharCmd,
    },
    /// Decomposition multiplicities.
    Decompose {
        #[command(subcommand)]
        kind: DecomposeCmd,
    },
    /// Run a verification suite (exit 1 on any failing check).
    Verify {
        /// One of: all, sn, schur, gt, weyl, hecke, diagram.
        suite: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        /// Shrink every bound for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand, Debug)]
enum DimCmd {
    /// dim of the S_n irreducible S^lambda (hook length formula).
    Sn {
        #[arg(long)]
        shape: String,
    },
    /// dim of the GL(n) irreducible V^lambda (hook content formula).
    Gl {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// Order and irreducible dimensions of G(r,p,n).
    Grpn {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
    /// Weyl dimension formula for a classical type.
    Weyl {
        /// Cartan type: a, b, c, or d.
        #[arg(long = "cartan-type")]
        cartan_type: String,
        #[arg(long)]
        rank: usize,
        /// Fundamental-weight coefficients, comma separated.
        #[arg(long)]
        weight: String,
    },
    /// Brauer algebra irreducible dimensions (up-down tableau counts).
    Brauer {
        #[arg(long)]
        k: usize,
    },
    /// Temperley-Lieb irreducible dimension (ballot number).
    Tl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    /// Murnaghan-Nakayama character table of S_n.
    Sn {
        #[arg(long)]
        n: usize,
    },
    /// q-character table of the Iwahori-Hecke algebra H_n(q).
    Hecke {
        #[arg(long)]
        n: usize,
    },
    /// Temperley-Lieb characters at the elements d_2h (closed form).
    Tl {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum DecomposeCmd {
    /// Restriction of S^lambda to S_k x S_l.
    Restrict {
        #[arg(long)]
        la: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Induction of the trivial module from S_mu to S_n.
    Induce {
        #[arg(long)]
        mu: String,
    },
    /// GL tensor product V^mu (x) V^nu.
    Tensor {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Kronecker coefficient gamma_(mu,nu,lambda).
    Kronecker {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        la: String,
    },
    /// A single Littlewood-Richardson coefficient c^lambda_(mu,nu).
    Lr {
        #[arg(long)]
        la: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
}

/// A computed command: canonical request, result JSON (as a string, so
/// cached bytes replay exactly), a human table, and CSV rows.
struct CommandOutput {
    request: Value,
    result_json: String,
    table: String,
    csv_rows: Vec<Vec<String>>,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout with success; real
            // parse errors exit 2.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    if let Command::Verify {
        suite,
        nmax,
        kmax,
        quick,
    } = &cli.command
    {
        let bounds = Bounds {
            nmax: *nmax,
            kmax: *kmax,
            quick: *quick,
        };
        let report = verify::run_suite(suite, bounds)?;
        print!("{}", render_verify_table(&report));
        if let Some(path) = &cli.json {
            let body = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::BadInput(format!("serialize report: {e}")))?;
            write_file(path, &body)?;
        }
        if let Some(path) = &cli.csv {
            let rows: Vec<Vec<String>> = std::iter::once(vec![
                "check".to_string(),
                "status".to_string(),
                "expected".to_string(),
                "actual".to_string(),
            ])
            .chain(report.checks.iter().map(|c| {
                vec![
                    c.id.clone(),
                    c.status.clone(),
                    c.expected.clone(),
                    c.actual.clone(),
                ]
            }))
            .collect();
            write_csv(path, &rows)?;
        }
        return Ok(if report.pass { 0 } else { 1 });
    }

    let output = compute_with_cache(&cli)?;
    print!("{}", output.table);
    if let Some(path) = &cli.json {
        let envelope = format!(
            "{{\"request\":{},\"result\":{},\"meta\":{{\"version\":\"{}\",\"elapsed_ms\":0}}}}",
            canonical(&output.request),
            output.result_json,
            env!("CARGO_PKG_VERSION"),
        );
        write_file(path, &envelope)?;
    }
    if let Some(path) = &cli.csv {
        write_csv(path, &output.csv_rows)?;
    }
    Ok(0)
}

fn compute_with_cache(cli: &Cli) -> Result<CommandOutput> {
    let (request, compute): (Value, Box<dyn Fn() -> Result<CommandOutput>>) = match &cli.command {
        Command::Dim { target } => dim_command(target),
        Command::Char { target } => char_command(target),
        Command::Decompose { kind } => decompose_command(kind),
        Command::Verify { .. } => unreachable!("verify handled separately"),
    };
    let cache = match (&cli.cache_dir, cli.no_cache) {
        (Some(dir), false) => Some(
            ResultCache::open(dir.clone())
                .map_err(|e| Error::BadInput(format!("cache dir: {e}")))?,
        ),
        _ => None,
    };
    if let Some(cache) = &cache {
        let key = ResultCache::digest(&canonical(&request));
        if let Some(stored) = cache.get(&key) {
            // Rebuild the table from the stored result so a hit is
            // byte-identical to a fresh run.
            let mut out = compute_table_from_cached(&cli.command, &stored)?;
            out.request = request;
            out.result_json = stored;
            return Ok(out);
        }
        let out = compute()?;
        cache
            .put(&key, &out.result_json)
            .map_err(|e| Error::BadInput(format!("cache write: {e}")))?;
        return Ok(out);
    }
    compute()
}

/// On a cache hit the result JSON is authoritative; recompute only the
/// presentation. The computations are pure, so replaying the command is
/// equivalent and keeps this path simple.
fn compute_table_from_cached(command: &Command, _stored: &str) -> Result<CommandOutput> {
    let (_, compute): (Value, Box<dyn Fn() -> Result<CommandOutput>>) = match command {
        Command::Dim { target } => dim_command(target),
        Command::Char { target } => char_command(target),
        Command::Decompose { kind } => decompose_command(kind),
        Command::Verify { .. } => unreachable!(),
    };
    compute()
}

fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON value serializes")
}

fn write_file(path: &PathBuf, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| Error::BadInput(format!("write {path:?}: {e}")))
}

fn write_csv(path: &PathBuf, rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| Error::BadInput(format!("open {path:?}: {e}")))?;
    for row in rows {
        w.write_record(row)
            .map_err(|e| Error::BadInput(format!("write csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::BadInput(format!("flush csv: {e}")))
}

fn render_verify_table(report: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&format!("[{}] {}: {}\n", c.status, c.id, c.actual));
    }
    out.push_str(&format!(
        "suite {}: {} ({} checks, {} ms)\n",
        report.suite,
        if report.pass { "PASS" } else { "FAIL" },
        report.checks.len(),
        report.wall_ms
    ));
    out
}

/// Render an aligned table: the first row is the header.
fn render_table(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return String::new();
    }
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:<width$}", cell, width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn big_str(v: &BigInt) -> String {
    v.to_string()
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(
        p.parts()
            .iter()
            .map(|&v| Value::Number(serde_json::Number::from(v as u64)))
            .collect(),
    )
}

type Prepared = (Value, Box<dyn Fn() -> Result<CommandOutput>>);

fn dim_command(target: &DimCmd) -> Prepared {
    match target {
        DimCmd::Sn { shape } => {
            let shape = shape.clone();
            let request = json!({"cmd": "dim", "target": "sn", "shape": shape});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let lam = Partition::parse(&shape)?;
                    let dim = crate::shapes::hook_dim(&lam)?;
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&json!({"dim": big_str(&dim)})),
                        table: format!("{dim}\n"),
                        csv_rows: vec![
                            vec!["lambda".into(), "dim".into()],
                            vec![lam.to_string(), big_str(&dim)],
                        ],
                    })
                }),
            )
        }
        DimCmd::Gl { shape, n } => {
            let (shape, n) = (shape.clone(), *n);
            let request = json!({"cmd": "dim", "target": "gl", "shape": shape, "n": n});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let lam = Partition::parse(&shape)?;
                    let dim = crate::shapes::hook_content_dim(&lam, n)?;
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&json!({"dim": big_str(&dim)})),
                        table: format!("{dim}\n"),
                        csv_rows: vec![
                            vec!["lambda".into(), "n".into(), "dim".into()],
                            vec![lam.to_string(), n.to_string(), big_str(&dim)],
                        ],
                    })
                }),
            )
        }
        DimCmd::Grpn { r, p, n } => {
            let (r, p, n) = (*r, *p, *n);
            let request = json!({"cmd": "dim", "target": "grpn", "r": r, "p": p, "n": n});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let data = hecke::grpn_data(r, p, n)?;
                    let mut table_rows = vec![vec!["index".to_string(), "dim".to_string()]];
                    let mut irreps_json = Vec::new();
                    if let Some(irreps) = &data.irreps {
                        for (idx, dim) in irreps {
                            table_rows.push(vec![idx.to_string(), big_str(dim)]);
                            irreps_json.push(json!({
                                "index": idx.0.iter().map(partition_json).collect::<Vec<_>>(),
                                "dim": big_str(dim),
                            }));
                        }
                    }
                    let result = json!({
                        "order": big_str(&data.order),
                        "irreps": irreps_json,
                    });
                    let mut table = format!("order {}\n", data.order);
                    if table_rows.len() > 1 {
                        table.push_str(&render_table(&table_rows));
                    }
                    let mut csv_rows = vec![vec![
                        "order".to_string(),
                        data.order.to_string(),
                    ]];
                    csv_rows.extend(table_rows);
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table,
                        csv_rows,
                    })
                }),
            )
        }
        DimCmd::Weyl {
            cartan_type,
            rank,
            weight,
        } => {
            let (ct, rank, weight) = (cartan_type.clone(), *rank, weight.clone());
            let request =
                json!({"cmd": "dim", "target": "weyl", "type": ct, "rank": rank, "weight": weight});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let t = weyl::CartanType::parse(&ct)?;
                    let rs = weyl::build_root_system(t, rank)?;
                    let coeffs: Vec<i64> = weight
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::BadInput(format!("bad coefficient {s:?}")))
                        })
                        .collect::<Result<_>>()?;
                    let w = rs.weight_from_coefficients(&coeffs)?;
                    let dim = weyl::weyl_dim(&rs, &w)?;
                    let dump = weyl::dump_root_system(&rs);
                    let result = json!({
                        "dim": big_str(&dim),
                        "weight_coords": w.display_coords(),
                        "root_system": serde_json::to_value(&dump)
                            .map_err(|e| Error::BadInput(e.to_string()))?,
                    });
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table: format!("{dim}\n"),
                        csv_rows: vec![
                            vec!["type".into(), "rank".into(), "weight".into(), "dim".into()],
                            vec![t.to_string(), rank.to_string(), weight.clone(), big_str(&dim)],
                        ],
                    })
                }),
            )
        }
        DimCmd::Brauer { k } => {
            let k = *k;
            let request = json!({"cmd": "dim", "target": "brauer", "k": k});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let report = diagram::brauer_dims(k)?;
                    let mut rows = vec![vec!["lambda".to_string(), "dim".to_string()]];
                    let mut dims_json = Vec::new();
                    for (lam, dim) in &report.dims {
                        rows.push(vec![lam.to_string(), big_str(dim)]);
                        dims_json.push(json!({
                            "lambda": partition_json(lam),
                            "dim": big_str(dim),
                        }));
                    }
                    let result = json!({
                        "dims": dims_json,
                        "sum_of_squares": big_str(&report.sum_of_squares),
                        "diagram_count": big_str(&report.diagram_count),
                        "consistent": report.consistent,
                    });
                    let mut table = render_table(&rows);
                    table.push_str(&format!(
                        "sum of squares {} = diagram count {}\n",
                        report.sum_of_squares, report.diagram_count
                    ));
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table,
                        csv_rows: rows,
                    })
                }),
            )
        }
        DimCmd::Tl { k, l } => {
            let (k, l) = (*k, *l);
            let request = json!({"cmd": "dim", "target": "tl", "k": k, "l": l});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let dim = diagram::tl_character_closed(k, l, 0)?;
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&json!({"dim": big_str(&dim)})),
                        table: format!("{dim}\n"),
                        csv_rows: vec![
                            vec!["k".into(), "l".into(), "dim".into()],
                            vec![k.to_string(), l.to_string(), big_str(&dim)],
                        ],
                    })
                }),
            )
        }
    }
}

fn char_command(target: &CharCmd) -> Prepared {
    match target {
        CharCmd::Sn { n } => {
            let n = *n;
            let request = json!({"cmd": "char", "target": "sn", "n": n});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let (parts, table) = symgroup::character_table(n)?;
                    let labels: Vec<String> = parts.iter().map(Partition::to_string).collect();
                    let mut rows = vec![std::iter::once("lambda\\mu".to_string())
                        .chain(labels.iter().cloned())
                        .collect::<Vec<_>>()];
                    let mut rows_json = Vec::new();
                    for (lam, values) in parts.iter().zip(&table) {
                        rows.push(
                            std::iter::once(lam.to_string())
                                .chain(values.iter().map(|v| v.to_string()))
                                .collect(),
                        );
                        rows_json.push(json!({
                            "lambda": partition_json(lam),
                            "values": values,
                        }));
                    }
                    let result = json!({"columns": labels, "rows": rows_json});
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table: render_table(&rows),
                        csv_rows: rows,
                    })
                }),
            )
        }
        CharCmd::Hecke { n } => {
            let n = *n;
            let request = json!({"cmd": "char", "target": "hecke", "n": n});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let (parts, table) = hecke::hecke_character_table(n)?;
                    let labels: Vec<String> = parts.iter().map(Partition::to_string).collect();
                    let mut rows = vec![std::iter::once("lambda\\mu".to_string())
                        .chain(labels.iter().cloned())
                        .collect::<Vec<_>>()];
                    let mut rows_json = Vec::new();
                    for (lam, values) in parts.iter().zip(&table) {
                        let rendered: Vec<String> =
                            values.iter().map(|v| v.to_string()).collect();
                        rows.push(
                            std::iter::once(lam.to_string())
                                .chain(rendered.iter().cloned())
                                .collect(),
                        );
                        rows_json.push(json!({
                            "lambda": partition_json(lam),
                            "values": rendered,
                        }));
                    }
                    let result = json!({"columns": labels, "rows": rows_json});
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table: render_table(&rows),
                        csv_rows: rows,
                    })
                }),
            )
        }
        CharCmd::Tl { k } => {
            let k = *k;
            let request = json!({"cmd": "char", "target": "tl", "k": k});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let hs: Vec<usize> = (0..=k / 2).collect();
                    let labels: Vec<String> = hs.iter().map(|h| format!("d{}", 2 * h)).collect();
                    let mut rows = vec![std::iter::once("lambda\\d".to_string())
                        .chain(labels.iter().cloned())
                        .collect::<Vec<_>>()];
                    let mut rows_json = Vec::new();
                    for l in 0..=k / 2 {
                        let lam = if k == 0 {
                            Partition::empty()
                        } else if l == 0 {
                            Partition::new(vec![k])?
                        } else {
                            Partition::new(vec![k - l, l])?
                        };
                        let values: Vec<String> = hs
                            .iter()
                            .map(|&h| {
                                diagram::tl_character_closed(k, l, h)
                                    .map(|v| v.to_string())
                            })
                            .collect::<Result<_>>()?;
                        rows.push(
                            std::iter::once(lam.to_string())
                                .chain(values.iter().cloned())
                                .collect(),
                        );
                        rows_json.push(json!({
                            "lambda": partition_json(&lam),
                            "values": values,
                        }));
                    }
                    let result = json!({"columns": labels, "rows": rows_json});
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&result),
                        table: render_table(&rows),
                        csv_rows: rows,
                    })
                }),
            )
        }
    }
}

fn expansion_output(
    req: Value,
    terms: Vec<(Value, String, u64)>,
) -> CommandOutput {
    // terms: (json key fields, display label, coefficient)
    let mut rows = vec![vec!["term".to_string(), "coeff".to_string()]];
    let mut terms_json = Vec::new();
    for (fields, label, coeff) in &terms {
        rows.push(vec![label.clone(), coeff.to_string()]);
        let mut obj = fields.as_object().cloned().unwrap_or_default();
        obj.insert("coeff".into(), json!(coeff));
        terms_json.push(Value::Object(obj));
    }
    let result = json!({"terms": terms_json});
    CommandOutput {
        request: req,
        result_json: canonical(&result),
        table: render_table(&rows),
        csv_rows: rows,
    }
}

fn decompose_command(kind: &DecomposeCmd) -> Prepared {
    match kind {
        DecomposeCmd::Restrict { la, k, l } => {
            let (la, k, l) = (la.clone(), *k, *l);
            let request =
                json!({"cmd": "decompose", "kind": "restrict", "lambda": la, "k": k, "l": l});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let lam = Partition::parse(&la)?;
                    let decomposition = symgroup::restrict_decompose(&lam, k, l)?;
                    let terms = decomposition
                        .iter()
                        .map(|((mu, nu), c)| {
                            (
                                json!({"mu": partition_json(mu), "nu": partition_json(nu)}),
                                format!("({mu}) x ({nu})"),
                                *c,
                            )
                        })
                        .collect();
                    Ok(expansion_output(req.clone(), terms))
                }),
            )
        }
        DecomposeCmd::Induce { mu } => {
            let mu = mu.clone();
            let request = json!({"cmd": "decompose", "kind": "induce", "mu": mu});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let m = Partition::parse(&mu)?;
                    let decomposition = symgroup::induce_trivial_decompose(&m)?;
                    let terms = decomposition
                        .iter()
                        .map(|(lam, c)| {
                            (json!({"lambda": partition_json(lam)}), lam.to_string(), *c)
                        })
                        .collect();
                    Ok(expansion_output(req.clone(), terms))
                }),
            )
        }
        DecomposeCmd::Tensor { mu, nu } => {
            let (mu, nu) = (mu.clone(), nu.clone());
            let request = json!({"cmd": "decompose", "kind": "tensor", "mu": mu, "nu": nu});
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let m = Partition::parse(&mu)?;
                    let n = Partition::parse(&nu)?;
                    let expansion = glnrep::tensor_decompose(&m, &n)?;
                    let terms = expansion
                        .iter()
                        .map(|(lam, c)| {
                            (json!({"lambda": partition_json(lam)}), lam.to_string(), *c)
                        })
                        .collect();
                    Ok(expansion_output(req.clone(), terms))
                }),
            )
        }
        DecomposeCmd::Kronecker { mu, nu, la } => {
            let (mu, nu, la) = (mu.clone(), nu.clone(), la.clone());
            let request = json!({
                "cmd": "decompose", "kind": "kronecker",
                "mu": mu, "nu": nu, "lambda": la,
            });
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let m = Partition::parse(&mu)?;
                    let n = Partition::parse(&nu)?;
                    let l = Partition::parse(&la)?;
                    let g = symgroup::kronecker(&m, &n, &l)?;
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&json!({"coeff": g})),
                        table: format!("{g}\n"),
                        csv_rows: vec![
                            vec!["mu".into(), "nu".into(), "lambda".into(), "coeff".into()],
                            vec![m.to_string(), n.to_string(), l.to_string(), g.to_string()],
                        ],
                    })
                }),
            )
        }
        DecomposeCmd::Lr { la, mu, nu } => {
            let (la, mu, nu) = (la.clone(), mu.clone(), nu.clone());
            let request = json!({
                "cmd": "decompose", "kind": "lr",
                "lambda": la, "mu": mu, "nu": nu,
            });
            let req = request.clone();
            (
                request,
                Box::new(move || {
                    let l = Partition::parse(&la)?;
                    let m = Partition::parse(&mu)?;
                    let n = Partition::parse(&nu)?;
                    let c = schur::lr_coeff(&l, &m, &n)?;
                    Ok(CommandOutput {
                        request: req.clone(),
                        result_json: canonical(&json!({"coeff": c})),
                        table: format!("{c}\n"),
                        csv_rows: vec![
                            vec!["lambda".into(), "mu".into(), "nu".into(), "coeff".into()],
                            vec![l.to_string(), m.to_string(), n.to_string(), c.to_string()],
                        ],
                    })
                }),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> i32 {
        run(std::iter::once("exactrep").chain(args.iter().copied()))
    }

    #[test]
    fn dim_commands_exit_zero() {
        assert_eq!(run_capture(&["dim", "sn", "--shape", "3,1,1"]), 0);
        assert_eq!(run_capture(&["dim", "gl", "--shape", "1", "--n", "7"]), 0);
        assert_eq!(run_capture(&["dim", "tl", "--k", "4", "--l", "1"]), 0);
    }

    #[test]
    fn malformed_input_exits_two() {
        assert_eq!(run_capture(&["dim", "sn", "--shape", "1,3"]), 2);
        assert_eq!(run_capture(&["dim", "nope"]), 2);
        assert_eq!(run_capture(&["verify", "bogus"]), 2);
    }

    #[test]
    fn verify_quick_smoke_exits_zero() {
        assert_eq!(
            run_capture(&["verify", "gt", "--quick", "--nmax", "2"]),
            0
        );
    }
}
