//! Plain, TSV and JSON-lines renderings of command results.

use std::io::{self, Write};

use serde::Serialize;

use octachar_core::characters::CharacterTable;
use octachar_core::verify::{CorrespondenceTable, DimensionMatch, Report, SignCensus};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Tsv,
}

/// A result that can be written in every [`Format`].
pub trait Record: Serialize {
    fn tsv_header() -> &'static str;
    fn tsv(&self) -> String;
    fn plain(&self) -> String {
        self.tsv()
    }
}

pub fn emit<R: Record>(out: &mut dyn Write, format: Format, records: &[R]) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in records {
                writeln!(out, "{}", r.plain())?;
            }
        }
        Format::Tsv => {
            writeln!(out, "{}", R::tsv_header())?;
            for r in records {
                writeln!(out, "{}", r.tsv())?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
pub struct ValueRecord {
    pub lambda: String,
    pub rho: String,
    pub value: i128,
}

impl Record for ValueRecord {
    fn tsv_header() -> &'static str {
        "lambda\trho\tvalue"
    }
    fn tsv(&self) -> String {
        format!("{}\t{}\t{}", self.lambda, self.rho, self.value)
    }
    fn plain(&self) -> String {
        self.value.to_string()
    }
}

#[derive(Serialize)]
pub struct CharTableRow {
    pub lambda: String,
    pub classes: Vec<String>,
    pub values: Vec<i128>,
}

/// Rows of `chartable`; the TSV header lists the classes, so it is written
/// by [`emit_char_table`] rather than [`emit`].
pub fn char_table_rows(table: &CharacterTable) -> Vec<CharTableRow> {
    let classes: Vec<String> = table.classes.iter().map(ToString::to_string).collect();
    table
        .irreducibles
        .iter()
        .zip(&table.values)
        .map(|(l, v)| CharTableRow {
            lambda: l.to_string(),
            classes: classes.clone(),
            values: v.clone(),
        })
        .collect()
}

pub fn emit_char_table(
    out: &mut dyn Write,
    format: Format,
    table: &CharacterTable,
) -> io::Result<()> {
    let rows = char_table_rows(table);
    if format == Format::Json {
        for r in &rows {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        return Ok(());
    }
    let classes: Vec<String> = table.classes.iter().map(ToString::to_string).collect();
    writeln!(out, "lambda\t{}", classes.join("\t"))?;
    for r in &rows {
        let values: Vec<String> = r.values.iter().map(ToString::to_string).collect();
        writeln!(out, "{}\t{}", r.lambda, values.join("\t"))?;
    }
    Ok(())
}

#[derive(Serialize)]
pub struct TextRecord {
    pub input: String,
    pub output: String,
}

impl Record for TextRecord {
    fn tsv_header() -> &'static str {
        "input\toutput"
    }
    fn tsv(&self) -> String {
        format!("{}\t{}", self.input, self.output)
    }
    fn plain(&self) -> String {
        self.output.clone()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum TableRecord {
    Row {
        bipartition: String,
        lambda_even: String,
        lambda_odd: String,
        theta_even: i128,
        theta_odd: i128,
        sign_even: i8,
        sign_odd: i8,
        bn_dim: i128,
    },
    Excluded {
        degree: usize,
        excluded: Vec<String>,
    },
}

pub fn table_records(table: &CorrespondenceTable) -> Vec<TableRecord> {
    let mut out: Vec<TableRecord> = table
        .rows
        .iter()
        .map(|r| TableRecord::Row {
            bipartition: r.bipartition.to_string(),
            lambda_even: r.lambda_even.to_string(),
            lambda_odd: r.lambda_odd.to_string(),
            theta_even: r.theta_even,
            theta_odd: r.theta_odd,
            sign_even: r.sign_even.value(),
            sign_odd: r.sign_odd.value(),
            bn_dim: r.bn_dim,
        })
        .collect();
    for (degree, list) in [
        (2 * table.n, &table.excluded_even),
        (2 * table.n + 1, &table.excluded_odd),
    ] {
        out.push(TableRecord::Excluded {
            degree,
            excluded: list.iter().map(ToString::to_string).collect(),
        });
    }
    out
}

impl Record for TableRecord {
    fn tsv_header() -> &'static str {
        "bipartition\tlambda_even\tlambda_odd\ttheta_even\ttheta_odd\tsign_even\tsign_odd\tbn_dim"
    }

    fn tsv(&self) -> String {
        match self {
            TableRecord::Row {
                bipartition,
                lambda_even,
                lambda_odd,
                theta_even,
                theta_odd,
                sign_even,
                sign_odd,
                bn_dim,
            } => format!(
                "{bipartition}\t{lambda_even}\t{lambda_odd}\t{theta_even}\t{theta_odd}\t{sign_even:+}\t{sign_odd:+}\t{bn_dim}"
            ),
            TableRecord::Excluded { degree, excluded } => {
                let mut line = format!("excluded\t{degree}");
                for e in excluded {
                    line.push('\t');
                    line.push_str(e);
                }
                line
            }
        }
    }

    fn plain(&self) -> String {
        match self {
            TableRecord::Row {
                bipartition,
                lambda_even,
                lambda_odd,
                theta_even,
                theta_odd,
                ..
            } => format!("{lambda_even} -> {lambda_odd}  theta = {theta_even}, theta' = {theta_odd}  {bipartition}"),
            TableRecord::Excluded { degree, excluded } => {
                format!("theta = 0 in S_{degree}: {}", excluded.join(" "))
            }
        }
    }
}

#[derive(Serialize)]
pub struct CensusRecord {
    pub m: usize,
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl From<SignCensus> for CensusRecord {
    fn from(c: SignCensus) -> Self {
        CensusRecord {
            m: c.m,
            total: c.total(),
            positive: c.num_positive,
            negative: c.num_negative,
            zero: c.num_zero,
        }
    }
}

impl Record for CensusRecord {
    fn tsv_header() -> &'static str {
        "m\ttotal\tpositive\tnegative\tzero"
    }
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.m, self.total, self.positive, self.negative, self.zero
        )
    }
    fn plain(&self) -> String {
        format!(
            "{} total, {} positive, {} negative, {} zero",
            self.total, self.positive, self.negative, self.zero
        )
    }
}

#[derive(Serialize)]
pub struct DimsRecord {
    pub n: usize,
    pub target: String,
    pub bipartitions: usize,
    pub matches: bool,
}

impl From<&DimensionMatch> for DimsRecord {
    fn from(d: &DimensionMatch) -> Self {
        DimsRecord {
            n: d.n,
            target: d.target.to_string(),
            bipartitions: d.bn_dimensions.len(),
            matches: d.holds(),
        }
    }
}

impl Record for DimsRecord {
    fn tsv_header() -> &'static str {
        "n\ttarget\tbipartitions\tmatches"
    }
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.n, self.target, self.bipartitions, self.matches
        )
    }
    fn plain(&self) -> String {
        let verdict = if self.matches {
            "match"
        } else {
            "DO NOT match"
        };
        format!(
            "n = {}, {}: {} bipartitions, dimensions {verdict} |theta(w0)|",
            self.n, self.target, self.bipartitions
        )
    }
}

#[derive(Serialize)]
pub struct ReportRecord {
    pub check: String,
    pub seed: Option<u64>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ReportRecord {
    pub fn new(check: &str, seed: Option<u64>, report: Report) -> Self {
        ReportRecord {
            check: check.to_string(),
            seed,
            checked: report.checked,
            failures: report.failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Record for ReportRecord {
    fn tsv_header() -> &'static str {
        "check\tseed\tchecked\tfailures"
    }
    fn tsv(&self) -> String {
        let seed = self.seed.map_or_else(|| "-".to_string(), |s| s.to_string());
        format!(
            "{}\t{seed}\t{}\t{}",
            self.check,
            self.checked,
            self.failures.len()
        )
    }
    fn plain(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} {}: {} checks, {} failures",
            self.check,
            self.checked,
            self.failures.len()
        );
        for f in &self.failures {
            s.push_str("\n  counterexample: ");
            s.push_str(f);
        }
        s
    }
}
