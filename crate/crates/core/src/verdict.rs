use std::fmt;

use serde::Serialize;

use crate::field::FieldSpec;

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Theorem,
    Homological,
    BaseCase,
}

/// A condition that a verdict checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Small-α base case: the graph must be `K1` or `K2` componentwise.
    BaseCase,
    /// Reisner: links have vanishing reduced homology below their dimension.
    CohenMacaulay,
    /// `I(G, -1) = (-1)^α`.
    AlternatingValue,
    /// Complements of `G_F` are cycles of length at least four.
    CycleLinks,
    /// Links in the core are homology spheres.
    SphereLinks,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::BaseCase => "base-case",
            Condition::CohenMacaulay => "cohen-macaulay",
            Condition::AlternatingValue => "alternating-value",
            Condition::CycleLinks => "cycle-links",
            Condition::SphereLinks => "sphere-links",
        })
    }
}

/// Evidence for a rejection. Faces are in the caller's original labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: Condition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<usize>>,
    /// Homological degree for homology-based conditions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<isize>,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.condition)?;
        if let Some(face) = &self.face {
            let items: Vec<String> = face.iter().map(usize::to_string).collect();
            write!(f, " at F={{{}}}", items.join(","))?;
        }
        if let Some(i) = self.degree {
            write!(f, " in degree {i}")?;
        }
        write!(f, ": expected {}, found {}", self.expected, self.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    pub route: Route,
    /// `None` when the verdict does not depend on the field.
    pub field: Option<FieldSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub checked: Vec<Condition>,
}

impl Verdict {
    pub fn accept(route: Route, field: Option<FieldSpec>, checked: Vec<Condition>) -> Self {
        Verdict { accepted: true, route, field, witness: None, checked }
    }

    pub fn reject(route: Route, field: Option<FieldSpec>, checked: Vec<Condition>, witness: Witness) -> Self {
        Verdict { accepted: false, route, field, witness: Some(witness), checked }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.accepted { "accepted" } else { "rejected" };
        let route = match self.route {
            Route::Theorem => "theorem",
            Route::Homological => "homological",
            Route::BaseCase => "base-case",
        };
        write!(f, "{word} ({route}")?;
        if let Some(k) = self.field {
            write!(f, ", {k}")?;
        }
        write!(f, ")")?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}
