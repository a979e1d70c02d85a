//! CSV catalog of known parameter sets.
//!
//! Header `v,b,r,k,lambda,status,source`; lines starting with `#` are
//! comments. Every row must be an integral point of the variety and no point
//! may appear twice.

use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use design_lines_core::enumeration::{Catalog, CatalogEntry, CatalogStatus};
use design_lines_core::DesignPoint;

use crate::CliError;

/// The catalog shipped with the crate.
pub const BUNDLED: &str = include_str!("../data/crc_mini.csv");

/// Environment variable naming a catalog file; `--catalog` takes precedence.
pub const CATALOG_ENV: &str = "DESIGN_LINES_CATALOG";

const HEADER: [&str; 7] = ["v", "b", "r", "k", "lambda", "status", "source"];

/// Parses catalog CSV. Errors carry the 1-based line number of the bad row.
pub fn load_catalog<R: Read>(source: R) -> Result<Catalog, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(source);
    let header = reader
        .headers()
        .map_err(|e| CliError::Domain(format!("catalog header: {e}")))?
        .clone();
    if header.iter().ne(HEADER) {
        return Err(CliError::Domain(format!(
            "catalog header must be {:?}, found {:?}",
            HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut catalog = Catalog::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Domain(format!("catalog: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let fail = |msg: String| CliError::Domain(format!("catalog line {line}: {msg}"));
        if record.len() != HEADER.len() {
            return Err(fail(format!("expected {} fields, found {}", HEADER.len(), record.len())));
        }
        let mut coords = [0i64; 5];
        for (slot, field) in coords.iter_mut().zip(record.iter()) {
            *slot = field
                .parse()
                .map_err(|_| fail(format!("{field:?} is not a decimal integer")))?;
        }
        let status: CatalogStatus = record[5].parse().map_err(|e| fail(format!("{e}")))?;
        let point = DesignPoint::from_ints(coords);
        let entry = CatalogEntry::new(point, status, &record[6]).map_err(|e| fail(e.to_string()))?;
        catalog.insert(entry).map_err(|e| fail(e.to_string()))?;
    }
    Ok(catalog)
}

pub fn load_catalog_file(path: &Path) -> Result<Catalog, CliError> {
    let file = File::open(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    load_catalog(file).map_err(|e| match e {
        CliError::Domain(msg) => CliError::Domain(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn bundled() -> Catalog {
    load_catalog(BUNDLED.as_bytes()).expect("bundled catalog is well formed")
}

/// The catalog path from the flag, falling back to the environment.
pub fn resolve_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CATALOG_ENV).filter(|s| !s.is_empty()).map(PathBuf::from))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<Catalog, CliError> {
        load_catalog(text.as_bytes())
    }

    #[test]
    fn rows_and_comments() {
        let cat = load(
            "# header comment\nv,b,r,k,lambda,status,source\n\
             22,33,12,8,4,nonexistent,BLT\n# note\n4,6,3,2,1,exists,affine plane order 2\n",
        )
        .unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(
            cat.status(&DesignPoint::from_ints([22, 33, 12, 8, 4])),
            Some(CatalogStatus::Nonexistent)
        );
        assert_eq!(cat.status(&DesignPoint::from_ints([4, 6, 3, 2, 1])), Some(CatalogStatus::Exists));
    }

    #[test]
    fn off_variety_row_reports_line() {
        let err = load("v,b,r,k,lambda,status,source\n4,6,3,2,1,exists,a\n4,6,3,2,2,exists,x\n").unwrap_err();
        let CliError::Domain(msg) = err else { panic!() };
        assert!(msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn duplicates_and_bad_tokens_rejected() {
        let dup = "v,b,r,k,lambda,status,source\n7,7,3,3,1,exists,a\n7,7,3,3,1,open,b\n";
        assert!(matches!(load(dup), Err(CliError::Domain(m)) if m.contains("line 3")));
        let bad = "v,b,r,k,lambda,status,source\n7,7,3,3,1,maybe,a\n";
        assert!(load(bad).is_err());
        let frac = "v,b,r,k,lambda,status,source\n7,7,3/2,3,1,exists,a\n";
        assert!(load(frac).is_err());
        assert!(load("v,b,r,k,l,status,source\n").is_err());
    }

    #[test]
    fn bundled_catalog_loads() {
        assert!(bundled().len() >= 13);
    }
}
