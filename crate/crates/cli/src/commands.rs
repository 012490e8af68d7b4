//! Command implementations shared by the binary, the corpus runner and the
//! tests.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use toric_stability::ehrhart::ehrhart_report;
use toric_stability::exact::rational::Rational;
use toric_stability::exact::validate_star;
use toric_stability::exact::PointConfiguration;
use toric_stability::secondary::{secondary_polytope, SecondaryPolytope};
use toric_stability::stability::verify_main_theorem;
use toric_stability::subdivision::{regular_subdivision, HeightFunction};
use toric_stability::Error;

use crate::document::{ConfigDocument, ParseError};
use crate::report::{
    render, CorpusEntry, CorpusReport, EhrhartOut, SecondaryReport, StabilityOut, ValidateReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Extension of configuration documents in corpus directories.
pub const DOCUMENT_EXTENSION: &str = "conf";

#[derive(Debug)]
pub enum Failure {
    /// Unreadable input or a malformed command-line value.
    Input(String),
    Parse(ParseError),
    /// Carries the rendered validation report.
    Invalid(String),
    Cap {
        count: usize,
        cap: usize,
    },
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) | Failure::Parse(_) => EXIT_PARSE,
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Cap { .. } => EXIT_CAP,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Failure::Input(_) => "input-error",
            Failure::Parse(_) => "parse-error",
            Failure::Invalid(_) => "invalid",
            Failure::Cap { .. } => "cap-exceeded",
            Failure::Internal(_) => "internal-error",
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Input(m) | Failure::Internal(m) => m.clone(),
            Failure::Parse(e) => format!("parse error at {e}"),
            Failure::Invalid(_) => "configuration fails validation".into(),
            Failure::Cap { count, cap } => {
                format!("enumeration cap exceeded: {count} full-dimensional simplices, cap {cap}")
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { count, cap } => Failure::Cap { count, cap },
            other => Failure::Internal(other.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub triangulations: bool,
    pub facets: bool,
    /// Overrides the document's heights.
    pub heights: Option<Vec<Rational>>,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            triangulations: false,
            facets: false,
            heights: None,
            cap: toric_stability::subdivision::DEFAULT_SIMPLEX_CAP,
        }
    }
}

pub fn load(path: &Path) -> Result<ConfigDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    ConfigDocument::parse(&text).map_err(Failure::Parse)
}

/// The validation verdict, and the configuration when it passes.
pub fn validate(doc: &ConfigDocument) -> (ValidateReport, Option<PointConfiguration>) {
    let mut report = ValidateReport {
        name: doc.name.clone(),
        dimension: doc.dimension,
        points: doc.points.len(),
        valid: false,
        violation: None,
    };
    match doc.configuration() {
        Err(e) => report.violation = Some(e.to_string()),
        Ok(c) => match validate_star(&c) {
            Err(v) => report.violation = Some(v.to_string()),
            Ok(v) => {
                report.valid = true;
                return (report, Some(v.into_inner()));
            }
        },
    }
    (report, None)
}

fn validated(doc: &ConfigDocument) -> Result<PointConfiguration, Failure> {
    match validate(doc) {
        (_, Some(c)) => Ok(c),
        (r, None) => Err(Failure::Invalid(render(&r))),
    }
}

pub fn secondary_report(
    doc: &ConfigDocument,
    config: &PointConfiguration,
    sp: &SecondaryPolytope,
    opts: &Options,
) -> Result<SecondaryReport, Failure> {
    let report = SecondaryReport::new(
        &doc.name,
        config.dim(),
        sp,
        opts.triangulations,
        opts.facets,
    );
    let Some(h) = opts.heights.as_ref().or(doc.heights.as_ref()) else {
        return Ok(report);
    };
    let w = HeightFunction::new(config, h.clone())
        .map_err(|e| Failure::Input(format!("--heights: {e}")))?;
    let s = regular_subdivision(config, &w)?;
    Ok(report.with_subdivision(h, &s))
}

pub fn secondary(doc: &ConfigDocument, opts: &Options) -> Result<SecondaryReport, Failure> {
    let config = validated(doc)?;
    let sp = secondary_polytope(&config, opts.cap)?;
    secondary_report(doc, &config, &sp, opts)
}

pub fn stability(doc: &ConfigDocument, opts: &Options) -> Result<StabilityOut, Failure> {
    let config = validated(doc)?;
    let sp = secondary_polytope(&config, opts.cap)?;
    Ok(StabilityOut::new(
        &doc.name,
        &sp,
        &verify_main_theorem(&config, &sp),
    ))
}

pub fn ehrhart(doc: &ConfigDocument) -> Result<EhrhartOut, Failure> {
    let config = validated(doc)?;
    Ok(EhrhartOut::new(&doc.name, &ehrhart_report(&config.hull())?))
}

/// Runs every command on one document; failures are recorded, not raised.
fn corpus_entry(path: &Path, opts: &Options) -> CorpusEntry {
    let file = path
        .file_name()
        .map_or_else(String::new, |f| f.to_string_lossy().into_owned());
    let mut entry = CorpusEntry {
        file,
        status: "ok",
        exit_code: EXIT_OK,
        error: None,
        validate: None,
        secondary: None,
        stability: None,
        ehrhart: None,
    };
    let fail = |mut entry: CorpusEntry, f: Failure| {
        entry.status = f.status();
        entry.exit_code = f.code();
        entry.error = Some(f.message());
        entry
    };

    let doc = match load(path) {
        Ok(d) => d,
        Err(f) => return fail(entry, f),
    };
    let (report, config) = validate(&doc);
    entry.validate = Some(report);
    let Some(config) = config else {
        return fail(entry, Failure::Invalid(String::new()));
    };
    let sp = match secondary_polytope(&config, opts.cap) {
        Ok(sp) => sp,
        Err(e) => return fail(entry, e.into()),
    };
    match secondary_report(&doc, &config, &sp, opts) {
        Ok(r) => entry.secondary = Some(r),
        Err(f) => return fail(entry, f),
    }
    entry.stability = Some(StabilityOut::new(
        &doc.name,
        &sp,
        &verify_main_theorem(&config, &sp),
    ));
    match ehrhart_report(&config.hull()) {
        Ok(r) => entry.ehrhart = Some(EhrhartOut::new(&doc.name, &r)),
        Err(e) => return fail(entry, e.into()),
    }
    entry
}

/// Document paths of a corpus directory, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let read = fs::read_dir(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in read {
        let path = entry
            .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?
            .path();
        if path.is_file() && path.extension().is_some_and(|x| x == DOCUMENT_EXTENSION) {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

/// Runs the full pipeline on every document of `dir`. The exit code is the
/// largest per-document code.
pub fn corpus(dir: &Path, opts: &Options) -> Result<(i32, CorpusReport), Failure> {
    let files = corpus_files(dir)?;
    let documents: Vec<CorpusEntry> = files.par_iter().map(|p| corpus_entry(p, opts)).collect();
    let failed = documents.iter().filter(|d| d.exit_code != EXIT_OK).count();
    let code = documents
        .iter()
        .map(|d| d.exit_code)
        .max()
        .unwrap_or(EXIT_OK);
    let report = CorpusReport {
        total: documents.len(),
        succeeded: documents.len() - failed,
        failed,
        documents,
    };
    Ok((code, report))
}
