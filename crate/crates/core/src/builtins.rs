//! Named graphs usable without input files.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `3K2`.
pub fn fig1a() -> Graph {
    Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).expect("valid edges")
}

/// `C5 ∪ K2`.
pub fn fig1b() -> Graph {
    Graph::cycle(5).disjoint_union(&Graph::complete(2))
}

/// The connected 8-vertex graph: vertex 0 with neighbours 1, 2, 3, and
/// `G_0 = 2K2` on {4,5,6,7} with 4 adjacent to both 1 and 3.
pub fn fig1c() -> Graph {
    Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (4, 5), (6, 7), (1, 4), (3, 4), (2, 5), (1, 6), (3, 7)])
        .expect("valid edges")
}

pub const NAMES: &str = "fig1a, fig1b, fig1c, cbarN, cN, kN, pN, emptyN";

/// Resolves `fig1a`, `fig1b`, `fig1c`, `cbarN`, `cN`, `kN`, `pN`, `emptyN`.
pub fn builtin(name: &str) -> Result<Graph> {
    let unknown = || Error::InvalidInput(format!("unknown builtin {name:?}; known: {NAMES}"));
    let name = name.trim().to_ascii_lowercase();
    match name.as_str() {
        "fig1a" => return Ok(fig1a()),
        "fig1b" => return Ok(fig1b()),
        "fig1c" => return Ok(fig1c()),
        _ => {}
    }
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
    let (family, digits) = name.split_at(split);
    let n: usize = digits.parse().map_err(|_| unknown())?;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { n, max: crate::graph::MAX_VERTICES });
    }
    let small = |min: usize| {
        if n < min {
            Err(Error::InvalidInput(format!("{family}{n} needs at least {min} vertices")))
        } else {
            Ok(())
        }
    };
    match family {
        "cbar" => {
            small(3)?;
            Ok(Graph::cycle(n).complement())
        }
        "c" => {
            small(3)?;
            Ok(Graph::cycle(n))
        }
        "k" => Ok(Graph::complete(n)),
        "p" => Ok(Graph::path(n)),
        "empty" => Ok(Graph::new(n)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(builtin("fig1c").unwrap().edge_count(), 10);
        assert_eq!(builtin("fig1b").unwrap().edge_count(), 6);
        assert_eq!(builtin("cbar6").unwrap().edge_count(), 9);
        assert_eq!(builtin("C5").unwrap(), Graph::cycle(5));
        assert_eq!(builtin("k4").unwrap().edge_count(), 6);
        assert_eq!(builtin("p3").unwrap().edge_count(), 2);
        assert_eq!(builtin("empty3").unwrap().edge_count(), 0);
        assert!(builtin("c2").is_err());
        assert!(builtin("q5").is_err());
        assert!(builtin("fig2").is_err());
        assert!(matches!(builtin("k65"), Err(Error::TooLarge { .. })));
    }
}
