use std::fmt;

use serde::Serialize;

use crate::butterfly::Butterfly;
use crate::error::{Error, Result};
use crate::form::{validate_butterfly, SchubertForm};
use crate::vertex::Bridge;

/// Reducedness and, for reduced forms, the number of link components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinkClass {
    pub form: SchubertForm,
    pub reduced: bool,
    pub components: Option<u8>,
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.components {
            None => write!(f, "not reduced"),
            Some(1) => write!(f, "reduced, knot"),
            Some(k) => write!(f, "reduced, {k} components"),
        }
    }
}

/// `μ` has exactly three cycles and each meets `E` in exactly two points.
pub fn is_reduced(bf: &Butterfly) -> bool {
    let set = bf.vertex_set();
    let cycles = bf.mu().cycles();
    cycles.len() == 3
        && cycles
            .iter()
            .all(|c| c.iter().filter(|&&v| set.is_endpoint(v)).count() == 2)
}

/// How many of `a_p ∈ O(a_0)`, `b_q ∈ O(b_0)`, `c_s ∈ O(c_0)` hold.
pub fn bridge_closures(bf: &Butterfly) -> [bool; 3] {
    let set = bf.vertex_set();
    Bridge::ALL.map(|b| bf.mu().orbit(set.start(b)).contains(&set.end(b)))
}

/// Component count of a reduced form: 1 if no bridge closes up in its own
/// `μ`-orbit, 2 if exactly one does, 3 if all do.
pub fn component_count(bf: &Butterfly) -> Result<u8> {
    if !is_reduced(bf) {
        return Err(Error::NotReduced(*bf.form()));
    }
    match bridge_closures(bf).iter().filter(|&&x| x).count() {
        0 => Ok(1),
        1 => Ok(2),
        3 => Ok(3),
        k => Err(Error::Internal(format!(
            "{}: {k} bridges close up in their own orbit",
            bf.form()
        ))),
    }
}

/// Validates, builds the butterfly and classifies it.
pub fn classify(form: &SchubertForm) -> Result<LinkClass> {
    let bf = checked_butterfly(form)?;
    if !is_reduced(&bf) {
        return Ok(LinkClass {
            form: *form,
            reduced: false,
            components: None,
        });
    }
    Ok(LinkClass {
        form: *form,
        reduced: true,
        components: Some(component_count(&bf)?),
    })
}

/// The butterfly of a form that passes every classification condition.
pub fn checked_butterfly(form: &SchubertForm) -> Result<Butterfly> {
    let report = validate_butterfly(form);
    if !report.ok {
        let names: Vec<_> = report.violations.iter().map(|c| c.name()).collect();
        return Err(Error::InvalidForm {
            form: *form,
            reason: format!("violates {}", names.join(", ")),
        });
    }
    Butterfly::new(*form)
}

/// The butterfly of a valid reduced form.
pub fn reduced_butterfly(form: &SchubertForm) -> Result<Butterfly> {
    let bf = checked_butterfly(form)?;
    if !is_reduced(&bf) {
        return Err(Error::NotReduced(*form));
    }
    Ok(bf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(text: &str) -> LinkClass {
        classify(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn paper_examples() {
        assert_eq!(class("(5/2,5/2,5/2)").components, Some(3));
        assert_eq!(class("(4/1,4/1,4/1)").components, Some(1));
        assert_eq!(class("(6/3,6/3,6/3)").components, Some(1));
        assert_eq!(class("(4/2,4/1,3/1)").components, Some(1));
        assert_eq!(class("(4/1,4/2,3/1)").components, Some(2));
        assert!(!class("(5/1,5/2,5/1)").reduced);
    }

    #[test]
    fn display() {
        assert_eq!(class("(4/1,4/2,3/1)").to_string(), "reduced, 2 components");
        assert_eq!(class("(5/1,5/2,5/1)").to_string(), "not reduced");
        assert_eq!(class("(4/1,4/1,4/1)").to_string(), "reduced, knot");
    }

    #[test]
    fn invalid_form_is_an_error() {
        let f: SchubertForm = "(3/1,2/2,2/2)".parse().unwrap();
        assert!(matches!(classify(&f), Err(Error::InvalidForm { .. })));
        let f: SchubertForm = "(5/1,5/2,5/1)".parse().unwrap();
        assert!(matches!(reduced_butterfly(&f), Err(Error::NotReduced(_))));
    }
}
