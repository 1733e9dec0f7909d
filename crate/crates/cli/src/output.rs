//! Result documents and their plain, JSON and CSV renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use semigroups::{
    CensusRecord, ClassificationVerdict, DoubleCoverDecomposition, NumericalSemigroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// The fields every serialized semigroup carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
    pub genus: u32,
    pub frobenius: i64,
    pub multiplicity: u32,
}

impl From<&NumericalSemigroup> for Summary {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.minimal_generators().to_vec(),
            gaps: s.gaps(),
            genus: s.genus(),
            frobenius: s.frobenius(),
            multiplicity: s.multiplicity(),
        }
    }
}

impl From<&CensusRecord> for Summary {
    fn from(r: &CensusRecord) -> Self {
        Self {
            generators: r.minimal_generators.clone(),
            gaps: r.semigroup.gaps(),
            genus: r.genus,
            frobenius: r.frobenius,
            multiplicity: r.multiplicity,
        }
    }
}

const SUMMARY_COLUMNS: [&str; 5] = ["generators", "gaps", "genus", "frobenius", "multiplicity"];

impl Summary {
    fn cells(&self) -> Vec<String> {
        vec![
            join(&self.generators),
            join(&self.gaps),
            self.genus.to_string(),
            self.frobenius.to_string(),
            self.multiplicity.to_string(),
        ]
    }

    fn plain_lines(&self, out: &mut String, indent: &str) {
        push_line(out, indent, "generators", &angle(&self.generators));
        push_line(out, indent, "gaps", &braces(&self.gaps));
        push_line(out, indent, "genus", &self.genus.to_string());
        push_line(out, indent, "frobenius", &self.frobenius.to_string());
        push_line(out, indent, "multiplicity", &self.multiplicity.to_string());
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn angle(values: &[u32]) -> String {
    format!("<{}>", join(values))
}

fn braces(values: &[u32]) -> String {
    format!("{{{}}}", join(values))
}

fn push_line(out: &mut String, indent: &str, key: &str, value: &str) {
    out.push_str(indent);
    out.push_str(key);
    out.push_str(": ");
    out.push_str(value);
    out.push('\n');
}

fn prefixed(prefix: &str, columns: &[&str]) -> Vec<String> {
    columns.iter().map(|c| format!("{prefix}{c}")).collect()
}

/// A CSV table: one header row plus data rows.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub trait Render: Serialize {
    fn plain(&self) -> String;
    fn table(&self) -> Table;
}

pub fn emit<R: Render, W: Write>(doc: &R, format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Plain => out.write_all(doc.plain().as_bytes()),
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, doc)?;
            out.write_all(b"\n")
        }
        Format::Csv => {
            let table = doc.table();
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(&table.header)?;
            for row in &table.rows {
                writer.write_record(row)?;
            }
            writer.flush()
        }
    }
}

#[derive(Serialize)]
pub struct InfoDoc {
    #[serde(flatten)]
    pub semigroup: Summary,
    pub embedding_dimension: usize,
    pub apery_modulus: u32,
    /// Indexed by residue modulo `apery_modulus`.
    pub apery_set: Vec<u32>,
}

impl InfoDoc {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let m = s.multiplicity();
        Self {
            semigroup: s.into(),
            embedding_dimension: s.embedding_dimension(),
            apery_modulus: m,
            apery_set: s.apery_set(m).expect("multiplicity is a member"),
        }
    }
}

impl Render for InfoDoc {
    fn plain(&self) -> String {
        let mut out = String::new();
        self.semigroup.plain_lines(&mut out, "");
        push_line(
            &mut out,
            "",
            "embedding dimension",
            &self.embedding_dimension.to_string(),
        );
        push_line(
            &mut out,
            "",
            &format!("apery set mod {}", self.apery_modulus),
            &join(&self.apery_set),
        );
        out
    }

    fn table(&self) -> Table {
        let mut header: Vec<String> = SUMMARY_COLUMNS.iter().map(|c| c.to_string()).collect();
        header.extend(["embedding_dimension", "apery_modulus", "apery_set"].map(String::from));
        let mut row = self.semigroup.cells();
        row.extend([
            self.embedding_dimension.to_string(),
            self.apery_modulus.to_string(),
            join(&self.apery_set),
        ]);
        Table {
            header,
            rows: vec![row],
        }
    }
}

#[derive(Serialize)]
pub struct D2Doc {
    pub input: Summary,
    pub d2: Summary,
}

impl Render for D2Doc {
    fn plain(&self) -> String {
        let mut out = String::new();
        push_line(&mut out, "", "input", &angle(&self.input.generators));
        out.push_str("d2:\n");
        self.d2.plain_lines(&mut out, "  ");
        out
    }

    fn table(&self) -> Table {
        let mut header: Vec<String> = SUMMARY_COLUMNS.iter().map(|c| c.to_string()).collect();
        header.extend(prefixed("d2_", &SUMMARY_COLUMNS));
        let mut row = self.input.cells();
        row.extend(self.d2.cells());
        Table {
            header,
            rows: vec![row],
        }
    }
}

/// Compact decomposition used as a classification witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub base: Vec<u32>,
    pub n: u32,
    pub offsets: Vec<u32>,
    pub r: u32,
}

impl From<&DoubleCoverDecomposition> for Witness {
    fn from(d: &DoubleCoverDecomposition) -> Self {
        Self {
            base: d.base().minimal_generators().to_vec(),
            n: d.n(),
            offsets: d.odd_offsets().to_vec(),
            r: d.r(),
        }
    }
}

impl Witness {
    fn expression(&self) -> String {
        let mut odd = vec![self.n.to_string()];
        odd.extend(self.offsets.iter().map(|l| format!("{}+2*{l}", self.n)));
        format!("2{} + <{}>", angle(&self.base), odd.join(","))
    }
}

#[derive(Serialize)]
pub struct DecomposeDoc {
    pub input: Summary,
    pub base: Summary,
    pub n: u32,
    pub offsets: Vec<u32>,
    pub r: u32,
}

impl DecomposeDoc {
    pub fn new(t: &NumericalSemigroup, d: &DoubleCoverDecomposition) -> Self {
        Self {
            input: t.into(),
            base: d.base().into(),
            n: d.n(),
            offsets: d.odd_offsets().to_vec(),
            r: d.r(),
        }
    }

    fn witness(&self) -> Witness {
        Witness {
            base: self.base.generators.clone(),
            n: self.n,
            offsets: self.offsets.clone(),
            r: self.r,
        }
    }
}

impl Render for DecomposeDoc {
    fn plain(&self) -> String {
        let mut out = String::new();
        push_line(&mut out, "", "input", &angle(&self.input.generators));
        push_line(&mut out, "", "genus", &self.input.genus.to_string());
        push_line(&mut out, "", "expression", &self.witness().expression());
        push_line(&mut out, "", "base", &angle(&self.base.generators));
        push_line(&mut out, "", "base genus", &self.base.genus.to_string());
        push_line(&mut out, "", "n", &self.n.to_string());
        push_line(&mut out, "", "offsets", &braces(&self.offsets));
        push_line(&mut out, "", "r", &self.r.to_string());
        out
    }

    fn table(&self) -> Table {
        let mut header: Vec<String> = SUMMARY_COLUMNS.iter().map(|c| c.to_string()).collect();
        header.extend(prefixed("base_", &SUMMARY_COLUMNS));
        header.extend(["n", "offsets", "r"].map(String::from));
        let mut row = self.input.cells();
        row.extend(self.base.cells());
        row.extend([self.n.to_string(), join(&self.offsets), self.r.to_string()]);
        Table {
            header,
            rows: vec![row],
        }
    }
}

#[derive(Serialize)]
pub struct ReassembleDoc {
    pub base: Summary,
    pub n: u32,
    pub offsets: Vec<u32>,
    pub result: Summary,
}

impl Render for ReassembleDoc {
    fn plain(&self) -> String {
        let mut out = String::new();
        let mut odd = vec![self.n];
        odd.extend(self.offsets.iter().map(|l| self.n + 2 * l));
        push_line(
            &mut out,
            "",
            "expression",
            &format!("2{} + {}", angle(&self.base.generators), angle(&odd)),
        );
        out.push_str("result:\n");
        self.result.plain_lines(&mut out, "  ");
        out
    }

    fn table(&self) -> Table {
        let mut header = prefixed("base_", &["generators"]);
        header.extend(["n", "offsets"].map(String::from));
        header.extend(SUMMARY_COLUMNS.iter().map(|c| c.to_string()));
        let mut row = vec![
            join(&self.base.generators),
            self.n.to_string(),
            join(&self.offsets),
        ];
        row.extend(self.result.cells());
        Table {
            header,
            rows: vec![row],
        }
    }
}

fn list_plain(out: &mut String, items: &[Summary]) {
    for s in items {
        out.push_str(&format!(
            "{}  genus={} frobenius={} gaps={}\n",
            angle(&s.generators),
            s.genus,
            s.frobenius,
            braces(&s.gaps)
        ));
    }
}

fn list_table(items: &[Summary]) -> Table {
    Table {
        header: SUMMARY_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows: items.iter().map(Summary::cells).collect(),
    }
}

#[derive(Serialize)]
pub struct PreimagesDoc {
    pub base: Summary,
    pub max_genus: u32,
    pub count: usize,
    pub semigroups: Vec<Summary>,
}

impl Render for PreimagesDoc {
    fn plain(&self) -> String {
        let mut out = format!(
            "preimages of {} under d2 with genus <= {}: {}\n",
            angle(&self.base.generators),
            self.max_genus,
            self.count
        );
        list_plain(&mut out, &self.semigroups);
        out
    }

    fn table(&self) -> Table {
        list_table(&self.semigroups)
    }
}

#[derive(Serialize)]
pub struct CensusDoc {
    pub genus: u32,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroups: Option<Vec<Summary>>,
}

impl Render for CensusDoc {
    fn plain(&self) -> String {
        match &self.semigroups {
            None => format!("{}\n", self.count),
            Some(items) => {
                let mut out = format!("semigroups of genus {}: {}\n", self.genus, self.count);
                list_plain(&mut out, items);
                out
            }
        }
    }

    fn table(&self) -> Table {
        match &self.semigroups {
            None => Table {
                header: vec!["genus".into(), "count".into()],
                rows: vec![vec![self.genus.to_string(), self.count.to_string()]],
            },
            Some(items) => list_table(items),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyDoc {
    pub input: Summary,
    pub d2: Summary,
    pub verdict: &'static str,
    pub provenance: &'static str,
    pub witness: Option<Witness>,
}

impl ClassifyDoc {
    pub fn new(t: &NumericalSemigroup, v: &ClassificationVerdict) -> Self {
        Self {
            input: t.into(),
            d2: (&semigroups::d2(t)).into(),
            verdict: v.verdict.as_str(),
            provenance: v.provenance.as_str(),
            witness: v.witness.as_ref().map(Witness::from),
        }
    }
}

impl Render for ClassifyDoc {
    fn plain(&self) -> String {
        let mut out = String::new();
        push_line(&mut out, "", "input", &angle(&self.input.generators));
        push_line(&mut out, "", "genus", &self.input.genus.to_string());
        push_line(&mut out, "", "d2", &angle(&self.d2.generators));
        push_line(&mut out, "", "d2 genus", &self.d2.genus.to_string());
        push_line(&mut out, "", "verdict", self.verdict);
        push_line(&mut out, "", "provenance", self.provenance);
        if let Some(w) = &self.witness {
            push_line(
                &mut out,
                "",
                "witness",
                &format!("{} (r = {})", w.expression(), w.r),
            );
        }
        out
    }

    fn table(&self) -> Table {
        let mut header: Vec<String> = SUMMARY_COLUMNS.iter().map(|c| c.to_string()).collect();
        header.extend(
            [
                "d2_generators",
                "verdict",
                "provenance",
                "witness_base",
                "witness_n",
                "witness_offsets",
                "witness_r",
            ]
            .map(String::from),
        );
        let mut row = self.input.cells();
        row.extend([
            join(&self.d2.generators),
            self.verdict.to_string(),
            self.provenance.to_string(),
        ]);
        match &self.witness {
            Some(w) => row.extend([
                join(&w.base),
                w.n.to_string(),
                join(&w.offsets),
                w.r.to_string(),
            ]),
            None => row.extend(std::iter::repeat_n(String::new(), 4)),
        }
        Table {
            header,
            rows: vec![row],
        }
    }
}
