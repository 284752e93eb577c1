//! JSON and CSV encodings of compositions, fillings, elements, matrices,
//! traces, verification reports and the enumeration cache.
//!
//! Coefficients are written as JSON numbers of arbitrary size.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use qsym_core::bijections::BijectionTrace;
use qsym_core::expansions::{CacheEntry, CacheKey, Tally};
use qsym_core::insertion::InsertionResult;
use qsym_core::{
    Basis, Composition, DescentFlavor, ExpansionReport, Filling, QSymElement, TableauKind, TransitionMatrix,
    VerificationReport,
};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositionJson {
    pub parts: Vec<usize>,
}

impl From<&Composition> for CompositionJson {
    fn from(c: &Composition) -> Self {
        CompositionJson { parts: c.parts().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FillingJson {
    pub kind: String,
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

impl From<&Filling> for FillingJson {
    fn from(f: &Filling) -> Self {
        FillingJson { kind: f.kind().name().to_string(), shape: f.shape().parts().to_vec(), rows: f.rows().to_vec() }
    }
}

impl FillingJson {
    pub fn to_filling(&self) -> Result<Filling, String> {
        let kind: TableauKind = self.kind.parse()?;
        let f = Filling::checked(kind, self.rows.clone()).map_err(|e| e.to_string())?;
        if f.shape().parts() != self.shape.as_slice() {
            return Err(format!("shape {:?} does not match the rows", self.shape));
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub parts: Vec<usize>,
    pub coeff: Number,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

pub fn number(c: &BigInt) -> Number {
    Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

impl From<&QSymElement> for ElementJson {
    fn from(e: &QSymElement) -> Self {
        ElementJson {
            basis: e.basis().to_string(),
            degree: e.degree(),
            terms: e
                .sorted_terms()
                .into_iter()
                .map(|(a, c)| TermJson { parts: a.parts().to_vec(), coeff: number(c) })
                .collect(),
        }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> Result<QSymElement, String> {
        let basis: Basis = self.basis.parse()?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let alpha = Composition::new(t.parts.clone()).map_err(|e| e.to_string())?;
            let c = BigInt::from_str(&t.coeff.to_string()).map_err(|e| format!("coefficient {}: {}", t.coeff, e))?;
            terms.push((alpha, c));
        }
        QSymElement::from_terms(basis, self.degree, terms).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub family: String,
    pub index: Vec<usize>,
    pub witness_count: u64,
    #[serde(flatten)]
    pub element: ElementJson,
}

impl From<&ExpansionReport> for ReportJson {
    fn from(r: &ExpansionReport) -> Self {
        ReportJson {
            family: r.family.to_string(),
            index: r.index.parts().to_vec(),
            witness_count: r.witness_count,
            element: ElementJson::from(&r.element),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub from: String,
    pub to: String,
    pub degree: usize,
    pub rows: Vec<Vec<usize>>,
    pub columns: Vec<Vec<usize>>,
    pub entries: Vec<Vec<Number>>,
}

impl From<&TransitionMatrix> for MatrixJson {
    fn from(m: &TransitionMatrix) -> Self {
        MatrixJson {
            from: m.from_basis.to_string(),
            to: m.to_basis.to_string(),
            degree: m.degree,
            rows: m.row_order.iter().map(|a| a.parts().to_vec()).collect(),
            columns: m.col_order.iter().map(|a| a.parts().to_vec()).collect(),
            entries: m.entries.iter().map(|r| r.iter().map(number).collect()).collect(),
        }
    }
}

/// First cell empty, header cells are column compositions, each row leads
/// with its composition.
pub fn write_matrix_csv(m: &TransitionMatrix, out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![String::new()];
    header.extend(m.col_order.iter().map(|a| a.to_string()));
    w.write_record(&header)?;
    for (alpha, row) in m.row_order.iter().zip(&m.entries) {
        let mut record = vec![alpha.to_string()];
        record.extend(row.iter().map(|c| c.to_string()));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_element_csv(e: &QSymElement, out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["basis", "composition", "coefficient"])?;
    for (alpha, c) in e.sorted_terms() {
        w.write_record([e.basis().to_string(), alpha.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Rows separated by `;`, entries by `,`: `2,1;2;4,3,2`.
pub fn format_rows(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_rows(s: &str) -> Result<Vec<Vec<u32>>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad entry `{}`: {}", x.trim(), e)))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepJson {
    pub inserting: u32,
    pub replaced: u32,
    pub row: usize,
    pub col: usize,
    pub remaining_word: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InsertionJson {
    pub input: FillingJson,
    pub value: u32,
    pub result: FillingJson,
    pub new_cell: [usize; 2],
    pub bumped: Vec<u32>,
    pub steps: Vec<StepJson>,
}

impl InsertionJson {
    pub fn new(input: &Filling, value: u32, r: &InsertionResult) -> Self {
        InsertionJson {
            input: input.into(),
            value,
            result: (&r.result).into(),
            new_cell: [r.new_cell.row + 1, r.new_cell.col + 1],
            bumped: r.bumped.clone(),
            steps: r
                .steps
                .iter()
                .map(|s| StepJson {
                    inserting: s.inserting,
                    replaced: s.replaced,
                    row: s.cell.row + 1,
                    col: s.cell.col + 1,
                    remaining_word: s.remaining_word.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacementJson {
    pub entry: u32,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceJson {
    pub map: String,
    pub input: FillingJson,
    pub output: FillingJson,
    pub steps: Vec<PlacementJson>,
}

impl TraceJson {
    pub fn new(map: &str, t: &BijectionTrace) -> Self {
        TraceJson {
            map: map.to_string(),
            input: (&t.input).into(),
            output: (&t.output).into(),
            steps: t
                .steps
                .iter()
                .map(|p| PlacementJson { entry: p.entry, row: p.cell.row + 1, col: p.cell.col + 1 })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseJson {
    pub label: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub name: String,
    pub passed: bool,
    pub cases: Vec<CaseJson>,
}

impl From<&VerificationReport> for VerificationJson {
    fn from(r: &VerificationReport) -> Self {
        VerificationJson {
            name: r.name.clone(),
            passed: r.passed(),
            cases: r.cases.iter().map(|(label, passed)| CaseJson { label: label.clone(), passed: *passed }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TallyJson {
    Weight(u32),
    Descents(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountJson {
    pub parts: Vec<usize>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntryJson {
    pub shape: Vec<usize>,
    pub kind: String,
    pub tally: TallyJson,
    pub witnesses: u64,
    pub counts: Vec<CountJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub entries: Vec<CacheEntryJson>,
}

pub const CACHE_VERSION: u32 = 1;

fn flavor_name(f: DescentFlavor) -> &'static str {
    match f {
        DescentFlavor::Descent => "D",
        DescentFlavor::TransposeDescent => "D'",
    }
}

impl CacheFile {
    pub fn from_entries<'a>(entries: impl Iterator<Item = (&'a CacheKey, &'a CacheEntry)>) -> Self {
        let entries = entries
            .map(|(k, v)| CacheEntryJson {
                shape: k.shape.parts().to_vec(),
                kind: k.kind.name().to_string(),
                tally: match k.tally {
                    Tally::Weight { max_entry } => TallyJson::Weight(max_entry),
                    Tally::Descents(f) => TallyJson::Descents(flavor_name(f).to_string()),
                },
                witnesses: v.witnesses,
                counts: v.counts.iter().map(|(a, &c)| CountJson { parts: a.parts().to_vec(), count: c }).collect(),
            })
            .collect();
        CacheFile { version: CACHE_VERSION, entries }
    }

    pub fn to_entries(&self) -> Result<Vec<(CacheKey, CacheEntry)>, String> {
        if self.version != CACHE_VERSION {
            return Err(format!("unsupported cache version {}", self.version));
        }
        let comp = |p: &[usize]| Composition::new(p.to_vec()).map_err(|e| e.to_string());
        self.entries
            .iter()
            .map(|e| {
                let tally = match &e.tally {
                    TallyJson::Weight(m) => Tally::Weight { max_entry: *m },
                    TallyJson::Descents(f) if f == "D" => Tally::Descents(DescentFlavor::Descent),
                    TallyJson::Descents(f) if f == "D'" => Tally::Descents(DescentFlavor::TransposeDescent),
                    TallyJson::Descents(f) => return Err(format!("unknown descent flavor `{}`", f)),
                };
                let key = CacheKey { shape: comp(&e.shape)?, kind: e.kind.parse()?, tally };
                let counts = e
                    .counts
                    .iter()
                    .map(|c| Ok((comp(&c.parts)?, c.count)))
                    .collect::<Result<_, String>>()?;
                Ok((key, CacheEntry { witnesses: e.witnesses, counts }))
            })
            .collect()
    }
}
