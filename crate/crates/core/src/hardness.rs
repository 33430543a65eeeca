//! Reduction from exact cover by 3-sets to OLD_oind on bipartite graphs.
//!
//! Element `x_i` of triple `S_j` is joined to `S_j` through its own vertex
//! `y_ij`, and every `S_j` sits on a private 6-cycle `S_j a_j b_j c_j d_j e_j`.
//! An exact cover `S'` gives the set
//! `{x_i, y_ij, a_j, b_j, d_j, e_j : S_j ∈ S'} ∪ {S_j, a_j, c_j, d_j : S_j ∉ S'}`
//! and conversely the triples whose vertex is left out of a valid set form an
//! exact cover.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::oldoind::{exists_oldoind_with, verify_oldoind, SearchOptions, SolveResult};

/// Largest collection handled by [`x3c_bruteforce`].
pub const MAX_BRUTEFORCE_SETS: usize = 24;

/// An X3C instance over the ground set `0..ground_size`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct X3CInstance {
    pub ground_size: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3CInstance {
    /// Checks the instance; each triple is stored sorted.
    pub fn new(ground_size: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if ground_size == 0 || !ground_size.is_multiple_of(3) {
            return Err(Error::InvalidInput(format!(
                "ground set size {ground_size} is not a positive multiple of 3"
            )));
        }
        let mut sorted = Vec::with_capacity(sets.len());
        for (j, mut t) in sets.into_iter().enumerate() {
            t.sort_unstable();
            if t[2] >= ground_size {
                return Err(Error::InvalidInput(format!(
                    "triple {} has element {} out of range",
                    j + 1,
                    t[2] + 1
                )));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidInput(format!(
                    "triple {} repeats an element",
                    j + 1
                )));
            }
            sorted.push(t);
        }
        Ok(X3CInstance {
            ground_size,
            sets: sorted,
        })
    }

    pub fn n(&self) -> usize {
        self.ground_size / 3
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    fn triple_bits(&self, j: usize) -> u64 {
        self.sets[j].iter().fold(0, |acc, &x| acc | 1 << x)
    }

    /// Whether the triples with the given indices partition the ground set.
    pub fn is_exact_cover(&self, cover: &[usize]) -> bool {
        let mut seen = 0u64;
        for &j in cover {
            if j >= self.m() {
                return false;
            }
            let t = self.triple_bits(j);
            if seen & t != 0 {
                return false;
            }
            seen |= t;
        }
        seen.count_ones() as usize == self.ground_size
    }

    fn check_cover(&self, cover: &[usize]) -> Result<()> {
        if self.is_exact_cover(cover) {
            Ok(())
        } else {
            let shown: Vec<String> = cover.iter().map(|j| format!("S{}", j + 1)).collect();
            Err(Error::NotExactCover(format!("{{{}}}", shown.join(", "))))
        }
    }
}

/// Text form: a header `3n m`, then one line of three 1-based elements per
/// triple. Blank lines and `#` comments are ignored.
impl FromStr for X3CInstance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let numbers = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(line, format!("bad number {t:?}")))
                })
                .collect()
        };
        let (line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty X3C instance"))?;
        let header = numbers(line, header)?;
        let [ground, m] = header[..] else {
            return Err(Error::parse(line, "header must be \"3n m\""));
        };
        let mut sets = Vec::with_capacity(m);
        for (line, l) in lines {
            let v = numbers(line, l)?;
            let [a, b, c] = v[..] else {
                return Err(Error::parse(line, "a triple needs exactly three elements"));
            };
            if a == 0 || b == 0 || c == 0 {
                return Err(Error::parse(line, "elements are numbered from 1"));
            }
            sets.push([a - 1, b - 1, c - 1]);
        }
        if sets.len() != m {
            return Err(Error::parse(
                0,
                format!("header announces {m} triples, found {}", sets.len()),
            ));
        }
        X3CInstance::new(ground, sets)
    }
}

impl fmt::Display for X3CInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.ground_size, self.m())?;
        for t in &self.sets {
            writeln!(f, "{} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
        }
        Ok(())
    }
}

/// Positions of the named gadget vertices. Names are 1-based as in the
/// construction: `x3`, `y3_2` (element 3 in triple 2), `S2`, `a2`, ….
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub x: Vec<usize>,
    /// `(element, triple, vertex)`, ordered by triple and then element.
    pub y: Vec<(usize, usize, usize)>,
    /// `[S_j, a_j, b_j, c_j, d_j, e_j]` per triple.
    pub rings: Vec<[usize; 6]>,
    /// Vertex names in index order.
    pub names: Vec<String>,
    #[serde(skip)]
    lookup: HashMap<String, usize>,
}

impl GadgetMap {
    pub fn index(&self, name: &str) -> Option<usize> {
        if self.lookup.is_empty() {
            return self.names.iter().position(|n| n == name);
        }
        self.lookup.get(name).copied()
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(v).map(String::as_str)
    }

    pub fn s(&self, j: usize) -> usize {
        self.rings[j][0]
    }

    pub fn ring_set(&self, j: usize) -> VertexSet {
        self.rings[j].iter().collect()
    }

    /// `y_ij` vertices of triple `j`.
    pub fn ys_of(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.y.iter().filter(move |t| t.1 == j).map(|t| t.2)
    }
}

const RING_LETTERS: [&str; 6] = ["S", "a", "b", "c", "d", "e"];

pub fn build_gadget(inst: &X3CInstance) -> Result<(Graph, GadgetMap)> {
    let (n3, m) = (inst.ground_size, inst.m());
    let order = n3 + 9 * m;
    if order > MAX_VERTICES {
        return Err(Error::capacity("gadget order", order, MAX_VERTICES));
    }
    let mut names = Vec::with_capacity(order);
    let x: Vec<usize> = (0..n3).collect();
    names.extend((1..=n3).map(|i| format!("x{i}")));
    let mut y = Vec::with_capacity(3 * m);
    for (j, t) in inst.sets.iter().enumerate() {
        for &i in t {
            y.push((i, j, names.len()));
            names.push(format!("y{}_{}", i + 1, j + 1));
        }
    }
    let mut rings = Vec::with_capacity(m);
    for j in 0..m {
        let base = names.len();
        rings.push(std::array::from_fn(|k| base + k));
        names.extend(RING_LETTERS.iter().map(|l| format!("{l}{}", j + 1)));
    }
    let mut edges = Vec::with_capacity(12 * m);
    for &(i, j, v) in &y {
        edges.push((x[i], v));
        edges.push((v, rings[j][0]));
    }
    for r in &rings {
        for k in 0..6 {
            edges.push((r[k], r[(k + 1) % 6]));
        }
    }
    let g = Graph::from_edges(order, &edges)?;
    if g.bipartition().is_none() {
        return Err(Error::ContractViolation("gadget is not bipartite".into()));
    }
    let lookup = names
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    Ok((
        g,
        GadgetMap {
            x,
            y,
            rings,
            names,
            lookup,
        },
    ))
}

/// The set built from an exact cover, checked on the gadget before return.
pub fn cover_to_set(
    inst: &X3CInstance,
    g: &Graph,
    map: &GadgetMap,
    cover: &[usize],
) -> Result<VertexSet> {
    inst.check_cover(cover)?;
    let mut d = VertexSet::EMPTY;
    for j in 0..inst.m() {
        let [s, a, b, c, dj, e] = map.rings[j];
        if cover.contains(&j) {
            for (i, jj, v) in &map.y {
                if *jj == j {
                    d.insert(map.x[*i]);
                    d.insert(*v);
                }
            }
            d |= [a, b, dj, e].iter().collect();
        } else {
            d |= [s, a, c, dj].iter().collect();
        }
    }
    if let Some(v) = verify_oldoind(g, d)?.violation {
        return Err(Error::ContractViolation(format!(
            "cover set {d} fails on the gadget: {v:?}"
        )));
    }
    Ok(d)
}

/// Reads the cover off a valid set: the triples whose vertex `S_j` is absent.
pub fn set_to_cover(
    inst: &X3CInstance,
    g: &Graph,
    map: &GadgetMap,
    d: VertexSet,
) -> Result<Vec<usize>> {
    if let Some(v) = verify_oldoind(g, d)?.violation {
        return Err(Error::WitnessInvalid(format!(
            "{d} is not an OLD_oind set of the gadget: {v:?}"
        )));
    }
    let cover: Vec<usize> = (0..inst.m()).filter(|&j| !d.contains(map.s(j))).collect();
    if !inst.is_exact_cover(&cover) {
        return Err(Error::ContractViolation(format!(
            "extracted triples {cover:?} are not an exact cover"
        )));
    }
    Ok(cover)
}

/// Lexicographically smallest exact cover, by exhaustive search.
pub fn x3c_bruteforce(inst: &X3CInstance) -> Result<Option<Vec<usize>>> {
    if inst.m() > MAX_BRUTEFORCE_SETS {
        return Err(Error::capacity(
            "X3C collection size",
            inst.m(),
            MAX_BRUTEFORCE_SETS,
        ));
    }
    let full = if inst.ground_size == 64 {
        u64::MAX
    } else {
        (1u64 << inst.ground_size) - 1
    };
    let bits: Vec<u64> = (0..inst.m()).map(|j| inst.triple_bits(j)).collect();
    fn go(bits: &[u64], j: usize, seen: u64, full: u64, chosen: &mut Vec<usize>) -> bool {
        if seen == full {
            return true;
        }
        if j == bits.len() {
            return false;
        }
        if seen & bits[j] == 0 {
            chosen.push(j);
            if go(bits, j + 1, seen | bits[j], full, chosen) {
                return true;
            }
            chosen.pop();
        }
        go(bits, j + 1, seen, full, chosen)
    }
    let mut chosen = Vec::new();
    Ok(go(&bits, 0, 0, full, &mut chosen).then_some(chosen))
}

/// The three ways a valid set can meet a ring: `{a, b, d, e}` without `S`,
/// or `S` with `{a, c, d}` or with `{b, c, e}`.
pub fn ring_patterns(ring: &[usize; 6]) -> [VertexSet; 3] {
    let [s, a, b, c, d, e] = *ring;
    [
        [a, b, d, e].iter().collect(),
        [s, a, c, d].iter().collect(),
        [s, b, c, e].iter().collect(),
    ]
}

/// Prune rule for the exact search on a gadget: cut a branch once some ring
/// can no longer end in one of its three patterns.
pub fn ring_prune(map: &GadgetMap) -> impl Fn(VertexSet, VertexSet) -> bool + Sync + '_ {
    let rings: Vec<(VertexSet, [VertexSet; 3])> = map
        .rings
        .iter()
        .map(|r| (r.iter().collect(), ring_patterns(r)))
        .collect();
    move |chosen, reachable| {
        rings.iter().any(|(ring, patterns)| {
            !patterns
                .iter()
                .any(|&q| q.is_subset(reachable) && !(*ring - q).intersects(chosen))
        })
    }
}

/// Exact search on the gadget with the ring rule switched on.
pub fn solve_gadget(g: &Graph, map: &GadgetMap, budget: Option<u64>) -> Result<SolveResult> {
    let hook = ring_prune(map);
    exists_oldoind_with(
        g,
        SearchOptions {
            budget,
            prune: Some(&hook),
        },
    )
}

/// All instances with the given ground size and `m` distinct triples, one
/// per orbit under relabeling of the ground set. Instances are listed in a
/// fixed order and every triple list is the smallest in its orbit.
pub fn enumerate_instances(ground_size: usize, m: usize) -> Result<Vec<X3CInstance>> {
    if ground_size == 0 || !ground_size.is_multiple_of(3) || ground_size > 9 {
        return Err(Error::InvalidInput(format!(
            "ground size {ground_size} is not 3, 6 or 9"
        )));
    }
    let mut triples = Vec::new();
    for a in 0..ground_size {
        for b in a + 1..ground_size {
            for c in b + 1..ground_size {
                triples.push([a, b, c]);
            }
        }
    }
    if m > triples.len() {
        return Ok(Vec::new());
    }
    let perms = permutations(ground_size);
    let canon = |sets: &[[usize; 3]]| -> Vec<[usize; 3]> {
        perms
            .iter()
            .map(|p| {
                let mut v: Vec<[usize; 3]> = sets
                    .iter()
                    .map(|t| {
                        let mut u = [p[t[0]], p[t[1]], p[t[2]]];
                        u.sort_unstable();
                        u
                    })
                    .collect();
                v.sort_unstable();
                v
            })
            .min()
            .unwrap_or_default()
    };
    let mut out = std::collections::BTreeSet::new();
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let sets: Vec<[usize; 3]> = idx.iter().map(|&i| triples[i]).collect();
        out.insert(canon(&sets));
        // Next m-combination of the triples.
        let Some(pos) = (0..m).rev().find(|&i| idx[i] < triples.len() - m + i) else {
            break;
        };
        idx[pos] += 1;
        for i in pos + 1..m {
            idx[i] = idx[i - 1] + 1;
        }
    }
    out.into_iter()
        .map(|sets| X3CInstance::new(ground_size, sets))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let swap = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(swap, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// The worked example: six elements and triples `{1,2,4}`, `{2,4,6}`,
/// `{3,5,6}`.
pub fn example_instance() -> X3CInstance {
    X3CInstance::new(6, vec![[0, 1, 3], [1, 3, 5], [2, 4, 5]]).expect("valid example")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oldoind::{all_oldoind_sets, exists_oldoind};

    #[test]
    fn parse_and_print() {
        let inst: X3CInstance = "6 3\n1 2 4\n2 4 6\n# last\n3 5 6\n".parse().unwrap();
        assert_eq!(inst, example_instance());
        assert_eq!(inst.to_string().parse::<X3CInstance>().unwrap(), inst);
        assert!("6 2\n1 2 3\n".parse::<X3CInstance>().is_err());
        assert!("6 1\n1 2 7\n".parse::<X3CInstance>().is_err());
        assert!("6 1\n1 1 2\n".parse::<X3CInstance>().is_err());
        assert!("5 1\n1 2 3\n".parse::<X3CInstance>().is_err());
        assert!("3 1\n0 1 2\n".parse::<X3CInstance>().is_err());
    }

    #[test]
    fn example_gadget() {
        let inst = example_instance();
        let (g, map) = build_gadget(&inst).unwrap();
        assert_eq!((g.order(), g.edge_count()), (33, 36));
        assert_eq!(g.girth().unwrap(), Some(6));
        assert_eq!(map.index("y4_2"), Some(map.y[4].2));
        assert_eq!(map.name(map.s(2)), Some("S3"));
        let cover = x3c_bruteforce(&inst).unwrap().unwrap();
        assert_eq!(cover, vec![0, 2]);
        let d = cover_to_set(&inst, &g, &map, &cover).unwrap();
        assert_eq!(d.len(), 24);
        assert_eq!(set_to_cover(&inst, &g, &map, d).unwrap(), cover);
        assert!(matches!(
            cover_to_set(&inst, &g, &map, &[0, 1]),
            Err(Error::NotExactCover(_))
        ));
        let found = solve_gadget(&g, &map, None).unwrap();
        assert!(found.found());
        assert_eq!(
            set_to_cover(&inst, &g, &map, found.set.unwrap()).unwrap(),
            cover
        );
    }

    #[test]
    fn one_triple() {
        let inst = X3CInstance::new(3, vec![[0, 1, 2]]).unwrap();
        let (g, map) = build_gadget(&inst).unwrap();
        assert_eq!((g.order(), g.edge_count()), (12, 12));
        let d = cover_to_set(&inst, &g, &map, &[0]).unwrap();
        assert_eq!(d.len(), 10);
        let (all, complete) = all_oldoind_sets(&g, SearchOptions::default(), usize::MAX).unwrap();
        assert!(complete && !all.is_empty());
        let patterns = ring_patterns(&map.rings[0]);
        for s in all {
            assert_eq!(set_to_cover(&inst, &g, &map, s).unwrap(), vec![0]);
            assert!(patterns.contains(&(s & map.ring_set(0))));
        }
    }

    #[test]
    fn bruteforce_examples() {
        let none = X3CInstance::new(6, vec![[0, 1, 2], [1, 3, 4], [2, 3, 5]]).unwrap();
        assert_eq!(x3c_bruteforce(&none).unwrap(), None);
        let (g, map) = build_gadget(&none).unwrap();
        assert!(!solve_gadget(&g, &map, None).unwrap().found());
        assert!(!exists_oldoind(&g).unwrap().found());
        let big = X3CInstance::new(3, vec![[0, 1, 2]; 25]).unwrap();
        assert!(matches!(
            x3c_bruteforce(&big),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn instance_orbits() {
        assert_eq!(enumerate_instances(3, 1).unwrap().len(), 1);
        assert_eq!(enumerate_instances(3, 2).unwrap().len(), 0);
        // Two triples on six points meet in 0, 1 or 2 elements.
        assert_eq!(enumerate_instances(6, 2).unwrap().len(), 3);
        assert_eq!(permutations(4).len(), 24);
    }
}
