//! Report formats. JSONL carries every field; CSV flattens the scalar ones.

use std::io::{self, Write};

use serde::Serialize;

use crate::record::ScanRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
    Pretty,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    graph6: &'a str,
    n: Option<usize>,
    edges: Option<usize>,
    mu2: Option<f64>,
    mun: Option<f64>,
    delta: Option<usize>,
    ratio: Option<f64>,
    toughness: Option<&'a str>,
    cut: String,
    components: Option<usize>,
    bd0: Option<f64>,
    bd1: Option<f64>,
    bd2: Option<f64>,
    slack0: Option<f64>,
    slack1: Option<f64>,
    slack2: Option<f64>,
    case_i: Option<bool>,
    case_ii: Option<bool>,
    case_iii: Option<bool>,
    case_iv: Option<bool>,
    guarantees: String,
    hamiltonian: Option<bool>,
    status: String,
}

impl<'a> From<&'a ScanRecord> for CsvRow<'a> {
    fn from(r: &'a ScanRecord) -> Self {
        let flags = r.case_flags;
        CsvRow {
            index: r.index,
            graph6: &r.graph6,
            n: r.n,
            edges: r.edges,
            mu2: r.mu2,
            mun: r.mun,
            delta: r.delta,
            ratio: r.ratio,
            toughness: r.toughness.as_deref(),
            cut: r
                .certificate
                .as_ref()
                .map(|c| {
                    c.cut
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default(),
            components: r.certificate.as_ref().map(|c| c.components),
            bd0: r.bd0,
            bd1: r.bd1,
            bd2: r.bd2,
            slack0: r.slack0,
            slack1: r.slack1,
            slack2: r.slack2,
            case_i: flags.map(|f| f.i),
            case_ii: flags.map(|f| f.ii),
            case_iii: flags.map(|f| f.iii),
            case_iv: flags.map(|f| f.iv),
            guarantees: r.guarantees.join(";"),
            hamiltonian: r.hamiltonian,
            status: r.status.to_string(),
        }
    }
}

pub fn write_records<W: Write>(out: W, records: &[ScanRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Jsonl => write_jsonl(out, records),
        Format::Csv => write_csv(out, records),
        Format::Pretty => write_pretty(out, records),
    }
}

fn write_jsonl<W: Write>(mut out: W, records: &[ScanRecord]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

fn write_csv<W: Write>(out: W, records: &[ScanRecord]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()
}

fn write_pretty<W: Write>(mut out: W, records: &[ScanRecord]) -> io::Result<()> {
    let num = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.6}"));
    for r in records {
        writeln!(out, "graph {}  {}", r.index, r.graph6)?;
        writeln!(out, "  status      {}", r.status)?;
        if let Some(e) = &r.error {
            writeln!(out, "  error       {e}")?;
        }
        if let (Some(n), Some(m)) = (r.n, r.edges) {
            writeln!(out, "  order/size  {n} / {m}")?;
        }
        if r.mu2.is_none() {
            continue;
        }
        writeln!(
            out,
            "  spectrum    mu2 {}  mun {}  ratio {}  delta {}",
            num(r.mu2),
            num(r.mun),
            num(r.ratio),
            r.delta.unwrap_or(0)
        )?;
        writeln!(
            out,
            "  toughness   {}",
            r.toughness.as_deref().unwrap_or("-")
        )?;
        if let Some(c) = &r.certificate {
            writeln!(
                out,
                "  cut         {:?} -> {} components {:?}",
                c.cut, c.components, c.component_sizes
            )?;
        }
        writeln!(out, "  bd0 {}  slack {}", num(r.bd0), num(r.slack0))?;
        writeln!(out, "  bd1 {}  slack {}", num(r.bd1), num(r.slack1))?;
        let bd2 = r.bd2.map_or("inf".to_string(), |v| format!("{v:.6}"));
        writeln!(out, "  bd2 {bd2}  slack {}", num(r.slack2))?;
        if let Some(f) = r.case_flags {
            writeln!(
                out,
                "  cases       i={} ii={} iii={} iv={}",
                f.i, f.ii, f.iii, f.iv
            )?;
        }
        if let Some(s) = &r.separation {
            writeln!(
                out,
                "  separation  |X|={} |Y|={} lhs {:.6} <= rhs {:.6}: {}",
                s.x_size, s.y_size, s.lhs, s.rhs, s.pass
            )?;
        }
        if let Some(i) = &r.independence {
            let alpha = i.alpha.map_or("-".to_string(), |a| a.to_string());
            writeln!(out, "  independence alpha {alpha} <= {:.6}", i.bound)?;
        }
        if let Some(h) = r.hamiltonian {
            writeln!(out, "  hamiltonian {h}")?;
        }
        for g in &r.guarantees {
            let check = match r.oracle_results.get(g) {
                Some(true) => "confirmed",
                Some(false) => "REFUTED",
                None => "unverified",
            };
            writeln!(out, "  guarantee   {g} ({check})")?;
        }
    }
    out.flush()
}
