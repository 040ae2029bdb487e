use std::fmt::Write;

/// One comparison per row: key cells, then computed/expected pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub cells: Vec<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

impl VerificationReport {
    pub fn new(columns: &[&str]) -> Self {
        VerificationReport {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, cells: Vec<String>, ok: bool) {
        assert_eq!(cells.len(), self.columns.len(), "row width");
        self.rows.push(Row { cells, ok });
    }

    pub fn summary(&self) -> Summary {
        let matched = self.rows.iter().filter(|r| r.ok).count();
        Summary {
            total: self.rows.len(),
            matched,
            mismatched: self.rows.len() - matched,
        }
    }

    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn first_mismatch(&self) -> Option<&Row> {
        self.rows.iter().find(|r| !r.ok)
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push_str(",match\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{}",
                row.cells.join(","),
                if row.ok { "yes" } else { "no" }
            );
        }
        out
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} rows, {} match, {} mismatch",
            self.total, self.matched, self.mismatched
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_csv() {
        let mut r = VerificationReport::new(&["n", "computed", "expected"]);
        r.push(vec!["0".into(), "1".into(), "1".into()], true);
        r.push(vec!["1".into(), "i".into(), "1".into()], false);
        let s = r.summary();
        assert_eq!((s.total, s.matched, s.mismatched), (2, 1, 1));
        assert!(!r.all_match());
        assert_eq!(
            r.to_csv(),
            "n,computed,expected,match\n0,1,1,yes\n1,i,1,no\n"
        );
        assert_eq!(r.first_mismatch().unwrap().cells[0], "1");
    }
}
