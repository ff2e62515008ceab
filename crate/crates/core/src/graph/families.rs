//! Named graph families.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn path(n: usize) -> Result<Graph> {
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &pairs)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs)
}

pub fn complete(n: usize) -> Result<Graph> {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &pairs)
}

/// Star `K_{1,m}` with center 0.
pub fn star(m: usize) -> Result<Graph> {
    let pairs: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Graph::from_edge_list(m + 1, &pairs)
}

/// `K⁺_{1,m}`: star with center 0 and leaves `1..=m`, plus the edge `(1, 2)`.
pub fn star_plus(m: usize) -> Result<Graph> {
    Graph::from_edge_list(m + 1, &star_plus_edges(m)?)
}

/// Edge list of [`star_plus`], available for any `m` regardless of the
/// vertex limit of [`Graph`].
pub fn star_plus_edges(m: usize) -> Result<Vec<(usize, usize)>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("star-plus needs m >= 3, got {m}")));
    }
    let mut pairs: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    pairs.push((1, 2));
    Ok(pairs)
}

/// `G(s, t)`: adjacent vertices 0 and 1, `t` common neighbours `2..t+2`, and
/// `s` pendant vertices hanging off vertex 0.
///
/// `n = s + t + 2`, `e = s + 2t + 1`.
pub fn family_g(s: usize, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "G(s, t) needs at least one common neighbour (t >= 1)".into(),
        ));
    }
    let mut pairs = vec![(0, 1)];
    for w in 2..t + 2 {
        pairs.push((0, w));
        pairs.push((1, w));
    }
    for w in t + 2..s + t + 2 {
        pairs.push((0, w));
    }
    Graph::from_edge_list(s + t + 2, &pairs)
}

/// Double star `S¹_{p,q}`: adjacent centers 0 and 1 carrying `p` and `q` leaves.
pub fn double_star(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!(
            "double star needs p, q >= 1, got ({p}, {q})"
        )));
    }
    let mut pairs = vec![(0, 1)];
    pairs.extend((2..p + 2).map(|w| (0, w)));
    pairs.extend((p + 2..p + q + 2).map(|w| (1, w)));
    Graph::from_edge_list(p + q + 2, &pairs)
}

/// Family names accepted on the command line: `star-plus:a`, `G:s,t`,
/// `double-star:p,q`, `path:n`, `cycle:n`, `complete:n`, `star:m`, `empty:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    StarPlus(usize),
    G(usize, usize),
    DoubleStar(usize, usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Empty(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::StarPlus(a) => star_plus(a),
            FamilySpec::G(s, t) => family_g(s, t),
            FamilySpec::DoubleStar(p, q) => double_star(p, q),
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Star(m) => star(m),
            FamilySpec::Empty(n) => empty(n),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Family { spec: spec.to_string(), reason: reason.to_string() };
        let (name, args) = spec.split_once(':').ok_or_else(|| bad("expected `name:args`"))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("arguments must be non-negative integers"))?;
        let one = || match nums.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad("expected one argument")),
        };
        let two = || match nums.as_slice() {
            [x, y] => Ok((*x, *y)),
            _ => Err(bad("expected two arguments")),
        };
        let parsed = match name.trim() {
            "star-plus" => FamilySpec::StarPlus(one()?),
            "G" | "g" => {
                let (s, t) = two()?;
                FamilySpec::G(s, t)
            }
            "double-star" => {
                let (p, q) = two()?;
                FamilySpec::DoubleStar(p, q)
            }
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "empty" => FamilySpec::Empty(one()?),
            _ => return Err(bad("unknown family")),
        };
        Ok(parsed)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::StarPlus(a) => write!(f, "star-plus:{a}"),
            FamilySpec::G(s, t) => write!(f, "G:{s},{t}"),
            FamilySpec::DoubleStar(p, q) => write!(f, "double-star:{p},{q}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(m) => write!(f, "star:{m}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_g_counts() {
        for s in 0..=20 {
            for t in 1..=20 {
                let g = family_g(s, t).unwrap();
                assert_eq!(g.n(), s + t + 2);
                assert_eq!(g.edge_count(), s + 2 * t + 1);
            }
        }
        let g21 = family_g(2, 1).unwrap();
        assert_eq!((g21.n(), g21.edge_count(), g21.cycle_space_dim()), (5, 5, 1));
        let g02 = family_g(0, 2).unwrap();
        assert_eq!((g02.n(), g02.edge_count()), (4, 5));
        assert!(family_g(3, 0).is_err());
    }

    #[test]
    fn star_plus_shape() {
        let g = star_plus(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        let mut deg = g.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 2, 2, 1]);
        assert_eq!(star_plus(4).unwrap().cycle_space_dim(), 1);
        for a in 3..=10 {
            assert_eq!(star_plus(a).unwrap().edge_count(), a + 1);
        }
        assert!(star_plus(2).is_err());
    }

    #[test]
    fn double_star_shape() {
        assert_eq!(double_star(1, 1).unwrap().relabel(&[1, 2, 0, 3]), path(4).unwrap());
        let g = double_star(2, 2).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.n(), 6);
        let g = double_star(3, 2).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.cycle_space_dim()), (7, 6, 0));
        assert!(double_star(0, 2).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!("star-plus:3".parse::<FamilySpec>().unwrap(), FamilySpec::StarPlus(3));
        assert_eq!("G:2,1".parse::<FamilySpec>().unwrap(), FamilySpec::G(2, 1));
        assert_eq!(
            "double-star:2, 2".parse::<FamilySpec>().unwrap(),
            FamilySpec::DoubleStar(2, 2)
        );
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("G:1".parse::<FamilySpec>().is_err());
        let spec = FamilySpec::G(4, 2);
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
    }
}
