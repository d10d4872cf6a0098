//! Named graph families with fixed labelings.
//!
//! Crown graphs put the part `1..=n` first and the primed part `1'..=n'` at
//! labels `n+1..=2n`, so `i` is adjacent to `j'` exactly when `i != j`. The
//! apex of `crown_apex(n)` is vertex `2n+1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    /// Cycle on `size` rim vertices `1..=size` plus hub `size+1`.
    Wheel,
    /// Two `size`-cycles `1..=size` and `size+1..=2size` joined by the matching `i ~ size+i`.
    Prism,
    Petersen,
    Crown,
    CrownApex,
    J4,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::Prism,
        Family::Petersen,
        Family::Crown,
        Family::CrownApex,
        Family::J4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Prism => "prism",
            Family::Petersen => "petersen",
            Family::Crown => "crown",
            Family::CrownApex => "crown_apex",
            Family::J4 => "j4",
        }
    }

    /// Families whose only member is a single fixed graph.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            Family::Petersen => Some(10),
            Family::J4 => Some(9),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL.into_iter().find(|f| f.name() == norm).ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Builds a member of `family`. `size` is the family parameter; the fixed
/// graphs (`petersen`, `j4`) accept `None` or their own vertex count.
pub fn generate(family: Family, size: Option<usize>) -> Result<Graph> {
    let bad = |size| Error::InvalidFamilySize { family: family.name(), size };
    if let Some(fixed) = family.fixed_size() {
        return match size {
            None => Ok(fixed_graph(family)),
            Some(s) if s == fixed => Ok(fixed_graph(family)),
            Some(s) => Err(bad(s)),
        };
    }
    let Some(m) = size else {
        return Err(bad(0));
    };
    let (min, verts) = match family {
        Family::Complete | Family::Empty | Family::Path => (1, m),
        Family::Cycle => (3, m),
        Family::Wheel => (3, m + 1),
        Family::Prism => (3, 2 * m),
        Family::Crown => (1, 2 * m),
        Family::CrownApex => (1, 2 * m + 1),
        Family::Petersen | Family::J4 => unreachable!(),
    };
    if m < min || verts > crate::graph::MAX_VERTICES {
        return Err(bad(m));
    }
    Ok(match family {
        Family::Complete => complete(m),
        Family::Empty => Graph::empty(m)?,
        Family::Path => path(m),
        Family::Cycle => cycle(m),
        Family::Wheel => wheel(m),
        Family::Prism => prism(m),
        Family::Crown => crown(m),
        Family::CrownApex => crown_apex(m),
        Family::Petersen | Family::J4 => unreachable!(),
    })
}

fn fixed_graph(family: Family) -> Graph {
    match family {
        Family::Petersen => petersen(),
        Family::J4 => j4(),
        _ => unreachable!(),
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("size");
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("size");
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge(0, n - 1);
    g
}

pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty(rim + 1).expect("size");
    for i in 0..rim {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    g
}

pub fn prism(m: usize) -> Graph {
    let mut g = Graph::empty(2 * m).expect("size");
    for i in 0..m {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(m + i, m + (i + 1) % m);
        g.add_edge(i, m + i);
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).expect("size");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

pub fn crown(n: usize) -> Graph {
    let mut g = Graph::empty(2 * n).expect("size");
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.add_edge(i, n + j);
            }
        }
    }
    g
}

pub fn crown_apex(n: usize) -> Graph {
    let mut g = Graph::empty(2 * n + 1).expect("size");
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.add_edge(i, n + j);
            }
        }
    }
    for v in 0..2 * n {
        g.add_edge(v, 2 * n);
    }
    g
}

pub const J4_EDGES: [(usize, usize); 18] = [
    (1, 2),
    (1, 3),
    (2, 3),
    (4, 5),
    (4, 6),
    (5, 6),
    (1, 7),
    (2, 7),
    (4, 7),
    (5, 7),
    (1, 8),
    (3, 8),
    (4, 8),
    (6, 8),
    (2, 9),
    (3, 9),
    (5, 9),
    (6, 9),
];

/// The 9-vertex, 4-regular graph with representation number 4 that is not a comparability graph.
pub fn j4() -> Graph {
    Graph::from_labeled_edges(9, &J4_EDGES).expect("static edge list")
}
