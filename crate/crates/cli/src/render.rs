use std::fmt::Write;

use divlab::catalog::{Catalog, EntryOutcome};
use divlab::criteria::{Detail, DivisorReport, Verdict};
use divlab::logder::{FreeBasis, SaitoData};
use divlab::strata::{MinorLadder, PieceKind, StratumPiece, StratumReport};
use divlab::{Ideal, Polynomial};

fn text_of<'a>(v: &'a Verdict, label: &str) -> Option<&'a str> {
    v.evidence.iter().find_map(|e| match &e.detail {
        Detail::Text(t) if e.label == label => Some(t.as_str()),
        _ => None,
    })
}

/// `label: value`, followed by the failures, the reason a check does not
/// apply, or a short summary.
pub fn verdict_line(label: &str, v: &Verdict) -> String {
    let mut line = format!("{label}: {}", v.value);
    let fails: Vec<&str> = v
        .evidence
        .iter()
        .filter_map(|e| match &e.detail {
            Detail::Text(t) if e.label == "fails" => Some(t.as_str()),
            _ => None,
        })
        .collect();
    if !v.applicable {
        let why = text_of(v, "inapplicable").unwrap_or("preconditions not met");
        let _ = write!(line, " (not applicable: {why})");
    } else if !fails.is_empty() {
        let _ = write!(line, " (fails: {})", fails.join("; "));
    } else if let Some(r) = text_of(v, "result") {
        let _ = write!(line, " ({r})");
    } else {
        let basis: Vec<&str> = v
            .evidence
            .iter()
            .filter_map(|e| e.label.strip_prefix("basis "))
            .collect();
        if !basis.is_empty() {
            let _ = write!(line, " (basis {})", basis.join(", "));
        }
    }
    line
}

fn dims(d: &[i32]) -> String {
    let parts: Vec<String> = d.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn report(r: &DivisorReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    let shape = match r.input.degree {
        Some(d) => format!("homogeneous of degree {d}"),
        None => "not homogeneous".into(),
    };
    line(format!("f = {}  [vars {}; {shape}]", r.input.poly, r.input.vars.join(",")));
    line(verdict_line("reduced", &r.reduced));
    line(verdict_line("product with a smooth factor", &r.product));
    if let Some(v) = &r.free {
        line(verdict_line("free", v));
    }
    if let Some(v) = &r.linear_free {
        line(verdict_line("linear free", v));
    }
    if let Some(s) = &r.seh {
        line(verdict_line("SEH on D0", &s.on_d0));
        line(verdict_line("SEH off D0", &s.off_d0));
        line(verdict_line("SEH", &s.everywhere));
    }
    if let Some(s) = &r.saito_holonomicity {
        line(verdict_line("weakly Saito-holonomic", &s.weak));
        line(verdict_line("Saito-holonomic", &s.plain));
        line(verdict_line("strong Saito-holonomic", &s.strong));
        if s.koszul_alias {
            line(format!(
                "Koszul aliases (free): weakly Koszul-free: {}, Koszul-free: {}, strongly Koszul-free: {}",
                s.weak.value, s.plain.value, s.strong.value
            ));
        }
    }
    if let Some(v) = &r.lct_trace_necessary {
        line(verdict_line("LCT trace condition", v));
    }
    if let Some(v) = &r.colon_consistency {
        line(verdict_line("colon consistency", v));
    }
    if let Some(v) = &r.linear_jacobian_type {
        line(verdict_line("linear Jacobian type", v));
    }
    line(format!("dims D: {}", dims(&r.ladder.dims_d)));
    line(format!("dims Dtilde: {}", dims(&r.ladder.dims_d_ext)));
    for p in &r.points {
        let mut s = format!("SEH at ({}): {}", p.p.join(","), p.seh);
        if let Some(w) = &p.witness {
            let _ = write!(s, " (witness {w})");
        }
        line(s);
    }
    for w in &r.warnings {
        line(format!("warning: {w}"));
    }
    out
}

pub fn unit_colon(u: &Polynomial, colon: &Ideal, same: bool) -> String {
    format!(
        "colon ideal of g = ({u})*f: ({})\nsqrt(colon(g)) = sqrt(colon(f)): {same}\n",
        join(colon)
    )
}

fn join(i: &Ideal) -> String {
    let g: Vec<String> = i.generators().iter().map(Polynomial::to_string).collect();
    g.join(", ")
}

pub fn derivations(sd: &SaitoData, basis: &FreeBasis) -> String {
    let mut out = String::new();
    for (i, d) in sd.derivations().iter().enumerate() {
        let _ = writeln!(out, "δ{} = {d}    [δ(f) = ({})*f]", i + 1, d.cofactor());
    }
    match basis {
        FreeBasis::Basis {
            indices, quotient, ..
        } => {
            let names: Vec<String> = indices.iter().map(|i| format!("δ{}", i + 1)).collect();
            let _ = writeln!(out, "free: true (basis {}; det = ({quotient})*f)", names.join(", "));
        }
        FreeBasis::NotFree { .. } => out.push_str("free: false\n"),
    }
    out
}

pub fn piece_name(p: &StratumPiece) -> String {
    let i = p.index;
    match p.kind {
        PieceKind::Seh => format!("D_{i} \\ Dtilde_{i}"),
        PieceKind::NonSeh if i == 0 => "Dtilde_0".into(),
        PieceKind::NonSeh => format!("Dtilde_{i} \\ D_{}", i - 1),
    }
}

pub fn ladder(l: &MinorLadder, strata: &StratumReport) -> String {
    let mut out = String::new();
    for k in 1..=l.n() {
        let _ = writeln!(out, "I_{k} = ({})", join(l.minors(k)));
        let _ = writeln!(out, "Itilde_{k} = ({})", join(l.extended_minors(k)));
    }
    let _ = writeln!(out, "(df):f = ({})", join(l.colon()));
    let _ = writeln!(out, "dims D: {}", dims(l.dims_d()));
    let _ = writeln!(out, "dims Dtilde: {}", dims(l.dims_d_ext()));
    for p in &strata.pieces {
        let what = match p.kind {
            PieceKind::Seh => "SEH points",
            PieceKind::NonSeh => "non-SEH points",
        };
        let state = if p.empty { "empty" } else { "nonempty" };
        let _ = writeln!(out, "{}: {state} ({what})", piece_name(p));
    }
    out
}

pub fn catalog_list(c: &Catalog) -> String {
    let mut out = String::new();
    let width = c.entries().iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in c.entries() {
        let flags = e.flags();
        let flags = if flags.is_empty() { String::new() } else { format!(" [{}]", flags.join(", ")) };
        let _ = writeln!(
            out,
            "{:width$}  {}  ({}){flags}",
            e.name,
            e.poly_text,
            e.ring.names().join(",")
        );
    }
    out
}

pub fn catalog_run(outcomes: &[EntryOutcome]) -> String {
    let mut out = String::new();
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    for o in outcomes {
        let _ = write!(out, "{:width$}  {}", o.name, o.status);
        if let Some(why) = &o.skipped {
            let _ = write!(out, "  ({why})");
        }
        out.push('\n');
        for m in &o.mismatches {
            let got = m.got.as_ref().map_or("missing".to_string(), |g| g.to_string());
            let _ = writeln!(out, "    {}: expected {}, got {got}", m.pointer, m.expected);
        }
        for v in &o.violations {
            let _ = writeln!(out, "    inconsistent: {v}");
        }
    }
    out
}
