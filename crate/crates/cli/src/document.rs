//! The analysis document: everything the library knows about one
//! singularity, in a shape that serializes to diff-friendly JSON and renders
//! as a plain-text report. All values are integers; the Hilbert-Kunz
//! multiplicity travels as a num/den pair.

use serde::{Deserialize, Serialize};
use ulrich_core::classify;
use ulrich_core::hj::HjExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub group: Group,
    pub hj: Hj,
    pub multiplicity: i64,
    /// Non-free special modules, ascending by index.
    pub special: Vec<SpecialModule>,
    /// Ulrich indices, ascending.
    pub ulrich: Vec<i64>,
    /// One row per module index, ascending.
    pub per_module: Vec<ModuleRow>,
    /// Generator census, ascending by m.
    pub census: Vec<CensusEntry>,
    pub ulrich_bounds: UlrichBounds,
    pub hilbert_kunz: HilbertKunz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub n: i64,
    pub a: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hj {
    pub alphas: Vec<i64>,
    pub i_series: Vec<i64>,
    pub j_series: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialModule {
    pub t: i64,
    /// Exponent pairs (i, j) of the two monomial generators x^i y^j.
    pub generators: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRow {
    pub t: i64,
    pub d: Vec<i64>,
    pub mu: i64,
    pub is_free: bool,
    pub is_special: bool,
    pub is_ulrich: bool,
    pub tau: i64,
    pub dual: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub m: i64,
    pub count: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichBounds {
    pub r: i64,
    pub lower: i64,
    pub upper: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertKunz {
    pub num: i64,
    pub den: i64,
}

/// Assemble the full document for one singularity.
pub fn build(hj: &HjExpansion) -> AnalysisDocument {
    let special = classify::special_set(hj)
        .into_iter()
        .filter(|m| !m.is_free)
        .map(|m| SpecialModule {
            t: m.index,
            generators: m.generators.unwrap_or_default(),
        })
        .collect();

    let per_module = (0..hj.n())
        .map(|t| {
            let rep = classify::report(hj, t);
            ModuleRow {
                t,
                d: rep.coefficients.coefficients().to_vec(),
                mu: rep.mu,
                is_free: rep.is_free,
                is_special: rep.is_special,
                is_ulrich: rep.is_ulrich,
                tau: rep.tau,
                dual: rep.dual,
            }
        })
        .collect();

    let census = classify::generator_census(hj)
        .into_iter()
        .map(|(m, count)| CensusEntry { m, count })
        .collect();

    let bounds = classify::ulrich_count_bounds(hj);
    let ehk = classify::hilbert_kunz(hj);

    AnalysisDocument {
        group: Group {
            n: hj.n(),
            a: hj.a(),
        },
        hj: Hj {
            alphas: hj.alphas().to_vec(),
            i_series: hj.i_series().to_vec(),
            j_series: hj.j_series().to_vec(),
        },
        multiplicity: hj.multiplicity(),
        special,
        ulrich: classify::ulrich_set_by_sum(hj),
        per_module,
        census,
        ulrich_bounds: UlrichBounds {
            r: bounds.curve_count as i64,
            lower: bounds.lower,
            upper: bounds.upper,
            actual: bounds.actual,
        },
        hilbert_kunz: HilbertKunz {
            num: ehk.num(),
            den: ehk.den(),
        },
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// The dual resolution graph as a one-line ASCII chain, e.g.
/// `E7(-2) -- E2(-4) -- E1(-2)`.
pub fn dual_graph_chain(doc: &AnalysisDocument) -> String {
    join(
        doc.hj
            .alphas
            .iter()
            .zip(&doc.hj.i_series[1..])
            .map(|(alpha, label)| format!("E{label}(-{alpha})")),
        " -- ",
    )
}

/// Render the document as a plain-text report.
pub fn render_text(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };

    push(&mut out, format!("cyclic quotient surface singularity 1/{}(1,{})", doc.group.n, doc.group.a));
    push(&mut out, String::new());
    push(&mut out, format!(
        "continued fraction   {}/{} = [{}]",
        doc.group.n,
        doc.group.a,
        join(&doc.hj.alphas, ",")
    ));
    push(&mut out, format!("i-series             {}", join(&doc.hj.i_series, " ")));
    push(&mut out, format!("j-series             {}", join(&doc.hj.j_series, " ")));
    push(&mut out, format!("multiplicity e(R)    {}", doc.multiplicity));
    push(&mut out, format!("dual graph           {}", dual_graph_chain(doc)));
    push(&mut out, format!(
        "hilbert-kunz         {}/{}",
        doc.hilbert_kunz.num, doc.hilbert_kunz.den
    ));
    push(&mut out, format!(
        "ulrich count         r = {} <= N = {} <= {} = 2^(r-1)",
        doc.ulrich_bounds.r, doc.ulrich_bounds.actual, doc.ulrich_bounds.upper
    ));
    push(&mut out, String::new());

    push(&mut out, "non-free special modules".to_string());
    for sp in &doc.special {
        let gens = join(
            sp.generators.iter().map(|(i, j)| match (i, j) {
                (0, j) => format!("y^{j}"),
                (i, 0) => format!("x^{i}"),
                (i, j) => format!("x^{i}y^{j}"),
            }),
            ", ",
        );
        push(&mut out, format!("  M{:<4} generated by {gens}", sp.t));
    }
    push(&mut out, String::new());

    push(&mut out, format!(
        "ulrich modules       {}",
        join(doc.ulrich.iter().map(|t| format!("M{t}")), " ")
    ));
    push(&mut out, String::new());

    push(&mut out, "generator census".to_string());
    for entry in &doc.census {
        push(&mut out, format!("  N_{:<3} = {}", entry.m, entry.count));
    }
    push(&mut out, String::new());

    push(&mut out, "module table".to_string());
    push(&mut out, format!("  {:>5}  {:<24} {:>3}  {:<20} {:>5}  {:>5}", "t", "d", "mu", "tags", "tau", "dual"));
    for row in &doc.per_module {
        let mut tags = Vec::new();
        if row.is_free {
            tags.push("free");
        }
        if row.is_special {
            tags.push("special");
        }
        if row.is_ulrich {
            tags.push("ulrich");
        }
        let tags = if tags.is_empty() { "-".to_string() } else { tags.join(",") };
        push(&mut out, format!(
            "  {:>5}  {:<24} {:>3}  {:<20} {:>5}  {:>5}",
            row.t,
            format!("({})", join(&row.d, ",")),
            row.mu,
            tags,
            row.tau,
            row.dual
        ));
    }
    out
}
