use std::fmt;

use crate::exactlin::LinMap;

/// A named square or axiom that did not commute, with `lhs − rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub residual: LinMap,
}

/// Outcome of a validator: empty `failures` means every check passed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record `check` as failed unless `lhs == rhs`.
    pub fn expect_eq(&mut self, check: impl Into<String>, lhs: &LinMap, rhs: &LinMap) {
        if lhs != rhs {
            let residual = if lhs.shape() == rhs.shape() {
                lhs - rhs
            } else {
                LinMap::zeros(0, 0)
            };
            self.failures.push(Failure {
                check: check.into(),
                residual,
            });
        }
    }

    pub fn fail(&mut self, check: impl Into<String>, residual: LinMap) {
        self.failures.push(Failure {
            check: check.into(),
            residual,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Append another report's failures with `prefix/` prepended to each name.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for f in other.failures {
            self.failures.push(Failure {
                check: format!("{prefix}/{}", f.check),
                residual: f.residual,
            });
        }
        self.notes.extend(other.notes);
    }

    pub fn has(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }

    pub fn first(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            write!(f, "ok")?;
        }
        for (i, fl) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let (max, nz) = fl.residual.residual_summary();
            write!(
                f,
                "{}: residual {}x{}, max |entry| = {}, nonzero = {}",
                fl.check,
                fl.residual.rows(),
                fl.residual.cols(),
                max,
                nz
            )?;
        }
        Ok(())
    }
}
