use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered names of the coordinates and the symbolic constants of a computation.
///
/// Variables come first, then parameters. The combined order fixes the monomial
/// order and the column order of every coefficient matrix built over the context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    variables: Vec<String>,
    parameters: Vec<String>,
}

/// Shared handle; every polynomial carries one.
pub type Ctx = Arc<VarContext>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    pub fn new<S: Into<String>, T: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = T>,
    ) -> Result<Ctx> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut seen = HashSet::new();
        for name in variables.iter().chain(&parameters) {
            if !valid_name(name) {
                return Err(Error::Schema(format!("`{name}` is not an identifier")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Arc::new(VarContext {
            variables,
            parameters,
        }))
    }

    /// Context without parameters.
    pub fn with_variables<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Result<Ctx> {
        VarContext::new(variables, Vec::<String>::new())
    }

    /// Context with variables `prefix1 … prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Ctx> {
        VarContext::with_variables((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    /// Number of indeterminates, variables and parameters together.
    pub fn len(&self) -> usize {
        self.variables.len() + self.parameters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self, index: usize) -> &str {
        if index < self.variables.len() {
            &self.variables[index]
        } else {
            &self.parameters[index - self.variables.len()]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables
            .iter()
            .chain(&self.parameters)
            .position(|n| n == name)
    }

    pub fn is_variable(&self, index: usize) -> bool {
        index < self.variables.len()
    }

    /// Index of a differentiable variable.
    pub fn variable_index(&self, name: &str) -> Result<usize> {
        match self.index_of(name) {
            Some(i) if self.is_variable(i) => Ok(i),
            Some(_) => Err(Error::NotAVariable(name.to_string())),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarContext({:?}; {:?})", self.variables, self.parameters)
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_ctx(a: &Ctx, b: &Ctx) -> Result<()> {
    if same_ctx(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert_eq!(
            VarContext::new(["x", "y"], ["x"]).unwrap_err(),
            Error::DuplicateName("x".into())
        );
        assert_eq!(
            VarContext::with_variables(Vec::<String>::new()).unwrap_err(),
            Error::NoVariables
        );
        assert!(VarContext::with_variables(["1x"]).is_err());
    }

    #[test]
    fn lookup() {
        let ctx = VarContext::new(["x", "y"], ["a"]).unwrap();
        assert_eq!(ctx.index_of("a"), Some(2));
        assert_eq!(ctx.variable_index("y"), Ok(1));
        assert_eq!(
            ctx.variable_index("a"),
            Err(Error::NotAVariable("a".into()))
        );
        assert_eq!(ctx.variable_index("q"), Err(Error::UnknownName("q".into())));
        assert_eq!(VarContext::indexed("x", 3).unwrap().name(2), "x3");
    }
}
