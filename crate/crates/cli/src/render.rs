//! Text, CSV and JSON renderings. Every function returns the full output so the
//! caller decides between stdout and `--out`.

use std::fmt::Write as _;

use fixpoint_core::bijections::{BijectionTrace, SetLabel};
use fixpoint_core::identities::{Identity, IdentityReport};
use fixpoint_core::{FixedPointTriangle, SequenceReport};
use num_bigint::BigUint;
use serde_json::{json, Number, Value};

fn big(v: &BigUint) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(v.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Figure-style table: zeros left blank.
pub fn triangle_table(t: &FixedPointTriangle, d_max: usize) -> String {
    let width = t
        .cells()
        .filter(|(_, d, _)| *d <= d_max)
        .map(|(_, _, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(d_max.to_string().len());
    let n_width = t.n_max().to_string().len().max(3);
    let mut out = String::new();
    let header: Vec<String> = (1..=d_max).map(|d| format!("{d:>width$}")).collect();
    let _ = writeln!(out, "{:>n_width$} | {}", "n\\d", header.join(" "));
    let _ = writeln!(out, "{}-+-{}", "-".repeat(n_width), "-".repeat((width + 1) * d_max - 1));
    for n in 1..=t.n_max() {
        let row = t.row(n).expect("row in range");
        let cells: Vec<String> = (1..=d_max)
            .map(|d| match row.get(d - 1) {
                Some(v) if v.bits() > 0 => format!("{v:>width$}"),
                _ => " ".repeat(width),
            })
            .collect();
        let line = format!("{n:>n_width$} | {}", cells.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

/// `n,d,f` with every cell for `d <= d_max`, zeros included.
pub fn triangle_csv(t: &FixedPointTriangle, d_max: usize) -> String {
    let mut rows = vec![vec!["n".to_string(), "d".to_string(), "f".to_string()]];
    for (n, d, v) in t.cells().filter(|(_, d, _)| *d <= d_max) {
        rows.push(vec![n.to_string(), d.to_string(), v.to_string()]);
    }
    csv_string(rows)
}

pub fn triangle_json(t: &FixedPointTriangle, d_max: usize) -> String {
    let records: Vec<Value> = t
        .cells()
        .filter(|(_, d, _)| *d <= d_max)
        .map(|(n, d, v)| json!({ "n": n, "d": d, "f": big(v) }))
        .collect();
    json_string(&Value::Array(records))
}

/// b-file style: `index value` per line.
pub fn sequence_table(s: &SequenceReport) -> String {
    let mut out = String::new();
    for (i, v) in s.indexed() {
        let _ = writeln!(out, "{i} {v}");
    }
    out
}

pub fn sequence_csv(s: &SequenceReport) -> String {
    let mut rows = vec![vec!["index".to_string(), "value".to_string()]];
    rows.extend(s.indexed().map(|(i, v)| vec![i.to_string(), v.to_string()]));
    csv_string(rows)
}

pub fn sequence_json(s: &SequenceReport) -> String {
    let records: Vec<Value> = s.indexed().map(|(i, v)| json!({ "index": i, "value": big(v) })).collect();
    json_string(&Value::Array(records))
}

fn union_of(labels: impl Iterator<Item = SetLabel>) -> String {
    let mut seen: Vec<SetLabel> = Vec::new();
    for l in labels {
        if !seen.contains(&l) {
            seen.push(l);
        }
    }
    seen.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ∪ ")
}

pub fn traces_table(traces: &[BijectionTrace]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} -> {}",
        union_of(traces.iter().map(|t| t.source_set)),
        union_of(traces.iter().map(|t| t.target_set))
    );
    let w_in = traces.iter().map(|t| t.input.compact().len()).max().unwrap_or(0);
    let w_out = traces.iter().map(|t| t.output.compact().len()).max().unwrap_or(0);
    let w_src = traces.iter().map(|t| t.source_set.to_string().len()).max().unwrap_or(0);
    let w_dst = traces.iter().map(|t| t.target_set.to_string().len()).max().unwrap_or(0);
    for t in traces {
        let _ = writeln!(
            out,
            "{:<w_src$}  {:<w_in$}  ->  {:<w_out$}  {:<w_dst$}  {}",
            t.source_set.to_string(),
            t.input.compact(),
            t.output.compact(),
            t.target_set.to_string(),
            t.case
        );
    }
    let _ = writeln!(out, "{} pairs", traces.len());
    out
}

pub fn traces_csv(traces: &[BijectionTrace]) -> String {
    let mut rows = vec![["source_set", "input", "case", "output", "target_set"]
        .map(String::from)
        .to_vec()];
    for t in traces {
        rows.push(vec![
            t.source_set.to_string(),
            t.input.canonical(),
            t.case.to_string(),
            t.output.canonical(),
            t.target_set.to_string(),
        ]);
    }
    csv_string(rows)
}

pub fn traces_json(traces: &[BijectionTrace]) -> String {
    let records: Vec<Value> = traces
        .iter()
        .map(|t| {
            json!({
                "source_set": t.source_set.to_string(),
                "input": t.input.parts(),
                "case": t.case.to_string(),
                "output": t.output.parts(),
                "target_set": t.target_set.to_string(),
            })
        })
        .collect();
    json_string(&Value::Array(records))
}

/// Outcome of the checks outside the identity sweep.
pub struct ExtraChecks {
    pub stabilization: Vec<(usize, bool)>,
    pub boundary: Vec<(usize, bool)>,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

pub fn verify_table(r: &IdentityReport, extra: &ExtraChecks) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "row sums");
    for row in &r.rows {
        let s = &row.row_sum;
        let ok = *s == row.positive_crank.into() && *s == row.crank_sum.into() && *s == row.even_mex.into();
        let _ = writeln!(
            out,
            "  n={} row_sum={} positive_crank={} sum_M(m>=1)={} even_mex={} (even_crank={}) {}",
            row.n,
            s,
            row.positive_crank,
            row.crank_sum,
            row.even_mex,
            row.even_crank,
            mark(ok)
        );
    }
    let _ = writeln!(out, "diagonal sums");
    for d in &r.diagonals {
        let ok = d.diag_sum == d.a_next && d.a_next == d.a_next_b_family && d.a_next == d.a_next_gf;
        let _ = writeln!(
            out,
            "  n={} diag_sum={} a({})={} (durfee={} b-family={} gf={}) {}",
            d.n,
            d.diag_sum,
            d.n + 1,
            d.a_next,
            d.a_next,
            d.a_next_b_family,
            d.a_next_gf,
            mark(ok)
        );
    }
    let _ = writeln!(out, "antidiagonal sums");
    for a in &r.antidiagonals {
        let _ = writeln!(
            out,
            "  n={} antidiag_sum={} p({})={} {}",
            a.n,
            a.antidiag_sum,
            a.n - 1,
            a.p_prev,
            mark(a.antidiag_sum == a.p_prev)
        );
    }
    let _ = writeln!(out, "stabilization");
    for &(d, ok) in &extra.stabilization {
        let _ = writeln!(out, "  d={d} f(d^2+k,d) = sum p(i)p(k-i), 0<=k<d {}", mark(ok));
    }
    for &(d, ok) in &extra.boundary {
        let _ = writeln!(out, "  d={d} f(d^2+d,d) = convolution(d) - 1 {}", mark(ok));
    }
    let _ = writeln!(out, "summary");
    for id in Identity::ALL {
        match r.first_counterexample(id) {
            None => {
                let _ = writeln!(out, "  PASS {id}");
            }
            Some(c) => {
                let _ = writeln!(out, "  FAIL {id}: first counterexample n={} ({} != {})", c.n, c.lhs, c.rhs);
            }
        }
    }
    let stab_ok = extra.stabilization.iter().chain(&extra.boundary).all(|(_, ok)| *ok);
    let _ = writeln!(out, "  {} stabilization", if stab_ok { "PASS" } else { "FAIL" });
    let matches = r
        .rows
        .iter()
        .filter(|row| row.row_sum == row.even_crank.into())
        .count();
    let _ = writeln!(
        out,
        "  info: even-crank count equals the row sum for {matches} of {} rows",
        r.rows.len()
    );
    out
}

pub fn verify_json(r: &IdentityReport, extra: &ExtraChecks) -> String {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "row_sum": big(&row.row_sum),
                "positive_crank": row.positive_crank,
                "crank_sum": row.crank_sum,
                "even_mex": row.even_mex,
                "even_crank": row.even_crank,
            })
        })
        .collect();
    let diagonals: Vec<Value> = r
        .diagonals
        .iter()
        .map(|d| {
            json!({
                "n": d.n,
                "diag_sum": big(&d.diag_sum),
                "a_next": big(&d.a_next),
                "a_next_b_family": big(&d.a_next_b_family),
                "a_next_gf": big(&d.a_next_gf),
            })
        })
        .collect();
    let antidiagonals: Vec<Value> = r
        .antidiagonals
        .iter()
        .map(|a| json!({ "n": a.n, "antidiag_sum": big(&a.antidiag_sum), "p_prev": big(&a.p_prev) }))
        .collect();
    let discrepancies: Vec<Value> = r
        .discrepancies
        .iter()
        .map(|d| json!({ "identity": d.identity.label(), "n": d.n, "lhs": big(&d.lhs), "rhs": big(&d.rhs) }))
        .collect();
    let checks = |v: &[(usize, bool)]| v.iter().map(|(d, ok)| json!({ "d": d, "ok": ok })).collect::<Vec<_>>();
    json_string(&json!({
        "n_max": r.n_max,
        "rows": rows,
        "diagonals": diagonals,
        "antidiagonals": antidiagonals,
        "stabilization": checks(&extra.stabilization),
        "boundary": checks(&extra.boundary),
        "discrepancies": discrepancies,
    }))
}

/// Long-form export of every swept sequence: `sequence,index,value`.
pub fn verify_csv(r: &IdentityReport) -> String {
    let mut rows = vec![["sequence", "index", "value"].map(String::from).to_vec()];
    for s in r.sequences() {
        for (i, v) in s.indexed() {
            rows.push(vec![s.name.clone(), i.to_string(), v.to_string()]);
        }
    }
    csv_string(rows)
}
