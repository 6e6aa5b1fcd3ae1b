//! The catalogue of named graphs.
//!
//! Vertex orders, per name:
//! - `fork`: claw centre 0, leaves 1, 2, 3, and 4 subdividing the edge 0-3 (so 3-4);
//! - `claw`: centre 0, leaves 1, 2, 3;
//! - `p<k>`: path 0-1-…-(k-1); `p6k1`: path 0-…-5 plus isolated 6;
//! - `dart`: 0 joined to isolated 1 and path 2-3-4;
//! - `banner`: 4-cycle 0-1-2-3 with pendant 4 on 0;
//! - `paw`: claw plus the edge 1-2; `codart`: paw plus isolated 4;
//! - `bull`: triangle 0-1-2 with pendants 3 on 0 and 4 on 1;
//! - `diamond`: 0 joined to path 1-2-3; `cocricket`: diamond plus isolated 4;
//! - `c<k>`: cycle 0-1-…-(k-1)-0;
//! - `balloon:<k>`: hole 0..k-1, `x = k` adjacent to 0 and 1, `y = k+1` adjacent to `x`;
//! - `parachute:<k>`: hole 0..k-1, apex `k` complete to the hole, pendant `k+1` on the apex;
//! - `triad`: three isolated vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternName {
    Fork,
    Claw,
    Path(usize),
    P6K1,
    Dart,
    Banner,
    Paw,
    CoDart,
    Bull,
    Diamond,
    CoCricket,
    Cycle(usize),
    Balloon(usize),
    Parachute(usize),
    Triad,
}

impl PatternName {
    /// Vertex count of the named graph.
    pub fn order(self) -> usize {
        use PatternName::*;
        match self {
            Fork | Dart | Banner | CoDart | Bull | CoCricket => 5,
            Claw | Paw | Diamond => 4,
            Path(k) | Cycle(k) => k,
            P6K1 => 7,
            Balloon(k) | Parachute(k) => k + 2,
            Triad => 3,
        }
    }
}

pub fn build_named_graph(name: PatternName) -> Result<Graph> {
    use PatternName::*;
    let k1 = || Graph::complete(1);
    match name {
        Fork => Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
        Claw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
        Path(k) => {
            if k == 0 {
                return Err(Error::Domain("P_k needs k >= 1".into()));
            }
            Graph::path(k)
        }
        P6K1 => Graph::path(6)?.disjoint_union(&k1()?),
        Dart => k1()?.join(&k1()?.disjoint_union(&Graph::path(3)?)?),
        Banner => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        Paw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]),
        CoDart => build_named_graph(Paw)?.disjoint_union(&k1()?),
        Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]),
        Diamond => k1()?.join(&Graph::path(3)?),
        CoCricket => build_named_graph(Diamond)?.disjoint_union(&k1()?),
        Cycle(k) => {
            if k < 3 {
                return Err(Error::Domain(format!("C_k needs k >= 3, got {k}")));
            }
            Graph::cycle(k)
        }
        Balloon(k) => {
            hole_len(k)?;
            let mut e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            e.extend([(k, 0), (k, 1), (k, k + 1)]);
            Graph::from_edges(k + 2, &e)
        }
        Parachute(k) => {
            hole_len(k)?;
            let mut e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            e.extend((0..k).map(|i| (k, i)));
            e.push((k, k + 1));
            Graph::from_edges(k + 2, &e)
        }
        Triad => Graph::edgeless(3),
    }
}

fn hole_len(k: usize) -> Result<()> {
    if k < 4 {
        return Err(Error::Domain(format!("a hole has length >= 4, got {k}")));
    }
    if k + 2 > crate::graph::MAX_VERTICES {
        return Err(Error::Domain(format!("hole length {k} too large")));
    }
    Ok(())
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternName::*;
        match self {
            Fork => write!(f, "fork"),
            Claw => write!(f, "claw"),
            Path(k) => write!(f, "p{k}"),
            P6K1 => write!(f, "p6k1"),
            Dart => write!(f, "dart"),
            Banner => write!(f, "banner"),
            Paw => write!(f, "paw"),
            CoDart => write!(f, "codart"),
            Bull => write!(f, "bull"),
            Diamond => write!(f, "diamond"),
            CoCricket => write!(f, "cocricket"),
            Cycle(k) => write!(f, "c{k}"),
            Balloon(k) => write!(f, "balloon:{k}"),
            Parachute(k) => write!(f, "parachute:{k}"),
            Triad => write!(f, "triad"),
        }
    }
}

impl FromStr for PatternName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use PatternName::*;
        let bad = || Error::Domain(format!("unknown pattern name {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let t = s.trim().to_ascii_lowercase();
        let name = match t.as_str() {
            "fork" | "chair" => Fork,
            "claw" => Claw,
            "p6k1" => P6K1,
            "dart" => Dart,
            "banner" => Banner,
            "paw" => Paw,
            "codart" => CoDart,
            "bull" => Bull,
            "diamond" => Diamond,
            "cocricket" => CoCricket,
            "triad" => Triad,
            _ => {
                if let Some(k) = t.strip_prefix("balloon:") {
                    Balloon(num(k)?)
                } else if let Some(k) = t.strip_prefix("parachute:") {
                    Parachute(num(k)?)
                } else if let Some(k) = t.strip_prefix('p') {
                    Path(num(k)?)
                } else if let Some(k) = t.strip_prefix('c') {
                    Cycle(num(k)?)
                } else {
                    return Err(bad());
                }
            }
        };
        // validate parameters up front so CLI errors surface at parse time
        build_named_graph(name)?;
        Ok(name)
    }
}

/// Parses a comma-separated list such as `fork,p7`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<PatternName>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

impl Serialize for PatternName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternName {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
