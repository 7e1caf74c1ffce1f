use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Spectral variables admit half-integer exponents, parameters only
/// non-negative integer ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Spectral,
    Parameter,
}

/// Handle into the process-wide symbol table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(u16);

fn registry() -> &'static RwLock<Vec<(String, VarKind)>> {
    static REGISTRY: OnceLock<RwLock<Vec<(String, VarKind)>>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(Vec::new()))
}

impl Variable {
    /// Interns `name`. Registering the same name twice with different kinds fails.
    pub fn try_new(name: &str, kind: VarKind) -> Result<Variable> {
        {
            let table = registry().read().expect("variable registry poisoned");
            if let Some(pos) = table.iter().position(|(n, _)| n == name) {
                return if table[pos].1 == kind {
                    Ok(Variable(pos as u16))
                } else {
                    Err(Error::VariableKind(name.to_string()))
                };
            }
        }
        let mut table = registry().write().expect("variable registry poisoned");
        if let Some(pos) = table.iter().position(|(n, _)| n == name) {
            return if table[pos].1 == kind {
                Ok(Variable(pos as u16))
            } else {
                Err(Error::VariableKind(name.to_string()))
            };
        }
        table.push((name.to_string(), kind));
        Ok(Variable((table.len() - 1) as u16))
    }

    pub fn spectral(name: &str) -> Variable {
        Self::try_new(name, VarKind::Spectral).expect("name already used for a parameter")
    }

    pub fn parameter(name: &str) -> Variable {
        Self::try_new(name, VarKind::Parameter).expect("name already used for a spectral variable")
    }

    pub fn name(&self) -> String {
        registry().read().expect("variable registry poisoned")[self.0 as usize]
            .0
            .clone()
    }

    pub fn kind(&self) -> VarKind {
        registry().read().expect("variable registry poisoned")[self.0 as usize].1
    }

    pub fn is_spectral(&self) -> bool {
        self.kind() == VarKind::Spectral
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
