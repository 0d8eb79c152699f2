//! Text and LaTeX emitters for the remainder tables and the generator-set
//! table.

use circnut::{GeneratorSet, IntPoly};
use circnut::search::{RowKind, ScanRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Text,
    Latex,
}

/// One `key: remainder` line per row, or a LaTeX longtable.
pub fn remainder_table(
    rows: &[(u64, IntPoly)],
    format: TableFormat,
    key_header: &str,
    value_header: &str,
) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            for (k, p) in rows {
                out.push_str(&format!("{k}: {p}\n"));
            }
        }
        TableFormat::Latex => {
            out.push_str("\\begin{longtable}{rl}\n");
            out.push_str(&format!("\\toprule {key_header} & {value_header} \\\\\n\\midrule\n"));
            for (k, p) in rows {
                out.push_str(&format!("{k} & ${}$ \\\\\n", p.to_latex()));
            }
            out.push_str("\\bottomrule\n\\end{longtable}\n");
        }
    }
    out
}

pub fn pstar_headers() -> (&'static str, &'static str) {
    ("$b$", "$P^*(y) \\pmod{\\Phi_b(y)}$")
}

pub fn q_remainder_headers(b: u64) -> (String, String) {
    (
        format!("$t \\bmod {{{b}}}$"),
        format!("$Q_{{S_t}}^{{\\!\\bmod{{{b}}}}}(y) \\bmod{{\\Phi_{{{b}}}(y)}}$"),
    )
}

/// `\{1,\dots,hi\}\setminus\{a,b\}` or `S_{t}`.
pub fn generator_cell(t: u64, removed: &[u64], almost_consecutive: bool) -> String {
    if almost_consecutive {
        return format!("$S_{{{t}}}$");
    }
    let hi = if t % 2 == 1 { 2 * t + 1 } else { 2 * t + 2 };
    let removed: Vec<String> = removed.iter().map(u64::to_string).collect();
    format!("$\\{{1,\\dots,{hi}\\}}\\setminus\\{{{}\\}}$", removed.join(","))
}

/// One generator-table row, `t & cell \\`.
pub fn scan_row_latex(rec: &ScanRecord) -> String {
    let cell = match rec.kind {
        RowKind::NotFound => "none found".to_string(),
        kind => generator_cell(rec.t, &rec.removed, kind == RowKind::AlmostConsecutive),
    };
    format!("{} & {} \\\\", rec.t, cell)
}

/// Set display used in JSON records.
pub fn set_elements(set: &GeneratorSet) -> Vec<u64> {
    set.elements().to_vec()
}
