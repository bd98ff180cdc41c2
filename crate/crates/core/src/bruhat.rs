//! Bruhat intervals, labeled Bruhat graphs, reflection orders, and
//! increasing-path machinery.

use std::collections::HashMap;

use serde_json::json;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::perm::{Perm, Transposition};

/// The interval [u, v] in Bruhat order, with elements listed by
/// (rank, word) so that index order refines the partial order.
pub struct BruhatInterval {
    u: Perm,
    v: Perm,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    rank: Vec<usize>,
    leq: BitMatrix,
}

impl BruhatInterval {
    /// Builds [u, v] by filtering the full group. Errors when u ≰ v.
    pub fn build(u: &Perm, v: &Perm) -> Result<BruhatInterval> {
        if u.n() != v.n() {
            return Err(Error::SizeMismatch(u.n(), v.n()));
        }
        if !u.bruhat_leq(v) {
            return Err(Error::NotComparable(u.to_string(), v.to_string()));
        }
        let n = u.n();
        let mut elements: Vec<Perm> = Perm::all(n)
            .filter(|x| u.bruhat_leq(x) && x.bruhat_leq(v))
            .collect();
        let base = u.length();
        elements.sort_by_key(|x| (x.length(), x.word().collect::<Vec<_>>()));
        let rank: Vec<usize> = elements.iter().map(|x| x.length() - base).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let m = elements.len();
        let mut leq = BitMatrix::new(m, m);
        for i in 0..m {
            for j in 0..m {
                if rank[i] <= rank[j] && elements[i].bruhat_leq(&elements[j]) {
                    leq.set(i, j);
                }
            }
        }
        Ok(BruhatInterval {
            u: u.clone(),
            v: v.clone(),
            elements,
            index,
            rank,
            leq,
        })
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    pub fn v(&self) -> &Perm {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains u
    }

    /// ℓ(u, v).
    pub fn length(&self) -> usize {
        self.v.length() - self.u.length()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.index.contains_key(x)
    }

    /// ℓ(u, x) for the element with index `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// elements[i] ≤ elements[j] in Bruhat order.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub(crate) fn leq_row(&self, i: usize) -> &[u64] {
        self.leq.row(i)
    }
}

/// A diamond in Γ(u,v): edges bottom → mid1, bottom → mid2, mid1 → top,
/// mid2 → top with mid1 ≠ mid2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diamond {
    pub bottom: usize,
    pub mid1: usize,
    pub mid2: usize,
    pub top: usize,
}

/// The Bruhat graph Γ(u,v): edges x → y whenever y∘x⁻¹ is a transposition
/// and ℓ(x) < ℓ(y), labeled by that transposition.
pub struct BruhatGraph {
    interval: BruhatInterval,
    out: Vec<Vec<(usize, Transposition)>>,
    inn: Vec<Vec<(usize, Transposition)>>,
    succ: BitMatrix,
    edge_count: usize,
    diamonds: Vec<Diamond>,
}

impl BruhatGraph {
    pub fn build(interval: BruhatInterval) -> BruhatGraph {
        let m = interval.len();
        let mut out: Vec<Vec<(usize, Transposition)>> = vec![Vec::new(); m];
        let mut inn: Vec<Vec<(usize, Transposition)>> = vec![Vec::new(); m];
        let mut succ = BitMatrix::new(m, m);
        let mut edge_count = 0;
        for i in 0..m {
            for j in i + 1..m {
                let d = interval.rank[j] as i64 - interval.rank[i] as i64;
                if d <= 0 || d % 2 == 0 {
                    continue;
                }
                if let Some(t) = edge_between(&interval.elements[i], &interval.elements[j]) {
                    out[i].push((j, t));
                    inn[j].push((i, t));
                    succ.set(i, j);
                    edge_count += 1;
                }
            }
        }
        let mut diamonds = Vec::new();
        for b in 0..m {
            for a in 0..out[b].len() {
                for c in a + 1..out[b].len() {
                    let (m1, _) = out[b][a];
                    let (m2, _) = out[b][c];
                    for top in succ.and_rows(m1, m2) {
                        diamonds.push(Diamond { bottom: b, mid1: m1, mid2: m2, top });
                    }
                }
            }
        }
        BruhatGraph { interval, out, inn, succ, edge_count, diamonds }
    }

    pub fn from_perms(u: &Perm, v: &Perm) -> Result<BruhatGraph> {
        Ok(BruhatGraph::build(BruhatInterval::build(u, v)?))
    }

    pub fn interval(&self) -> &BruhatInterval {
        &self.interval
    }

    pub fn len(&self) -> usize {
        self.interval.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn out_edges(&self, i: usize) -> &[(usize, Transposition)] {
        &self.out[i]
    }

    pub fn in_edges(&self, i: usize) -> &[(usize, Transposition)] {
        &self.inn[i]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.succ.get(i, j)
    }

    pub fn label(&self, i: usize, j: usize) -> Option<Transposition> {
        if !self.has_edge(i, j) {
            return None;
        }
        edge_between(&self.interval.elements[i], &self.interval.elements[j])
    }

    /// Common Γ-successors of two vertices, ascending.
    pub fn common_successors(&self, i: usize, j: usize) -> Vec<usize> {
        self.succ.and_rows(i, j)
    }

    pub fn diamonds(&self) -> &[Diamond] {
        &self.diamonds
    }

    /// Index of u (always 0: the unique rank-0 element sorts first).
    pub fn u_idx(&self) -> usize {
        0
    }

    /// Index of v (always last: the unique top-rank element sorts last).
    pub fn v_idx(&self) -> usize {
        self.interval.len() - 1
    }

    /// Debug dump: JSON list of edges [x, y, [i, j]] in permutation text form.
    pub fn dump_json(&self) -> serde_json::Value {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            for &(y, t) in &self.out[x] {
                edges.push(json!([
                    self.interval.elements[x].to_string(),
                    self.interval.elements[y].to_string(),
                    [t.i(), t.j()],
                ]));
            }
        }
        json!(edges)
    }
}

/// The transposition t with y = t∘x, if one exists: the words must differ in
/// exactly two positions (with swapped values).
fn edge_between(x: &Perm, y: &Perm) -> Option<Transposition> {
    let mut diff = (0..x.n()).filter(|&p| x.apply(p + 1) != y.apply(p + 1));
    let p = diff.next()?;
    let q = diff.next()?;
    if diff.next().is_some() {
        return None;
    }
    debug_assert_eq!(x.apply(p + 1), y.apply(q + 1));
    debug_assert_eq!(x.apply(q + 1), y.apply(p + 1));
    Some(Transposition::new(x.apply(p + 1), x.apply(q + 1)))
}

/// A total reflection order on the transpositions of S_n.
#[derive(Clone, PartialEq, Eq)]
pub struct ReflectionOrder {
    n: usize,
    seq: Vec<Transposition>,
    pos: Vec<u32>, // indexed by (i-1)*n + (j-1)
}

impl ReflectionOrder {
    fn from_seq_unchecked(n: usize, seq: Vec<Transposition>) -> ReflectionOrder {
        let mut pos = vec![u32::MAX; n * n];
        for (p, t) in seq.iter().enumerate() {
            pos[(t.i() - 1) * n + (t.j() - 1)] = p as u32;
        }
        ReflectionOrder { n, seq, pos }
    }

    /// Validates the triple condition and completeness.
    pub fn from_seq(n: usize, seq: Vec<Transposition>) -> Result<ReflectionOrder> {
        let order = ReflectionOrder::from_seq_unchecked(n, seq);
        if order.seq.len() != n * (n - 1) / 2 || !order.is_valid() {
            return Err(Error::ParsePerm(format!(
                "not a reflection order of S_{n}: {:?}",
                order.seq
            )));
        }
        Ok(order)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seq(&self) -> &[Transposition] {
        &self.seq
    }

    #[inline]
    pub fn position(&self, t: Transposition) -> usize {
        self.pos[(t.i() - 1) * self.n + (t.j() - 1)] as usize
    }

    /// t ≺ s in this order.
    #[inline]
    pub fn before(&self, t: Transposition, s: Transposition) -> bool {
        self.position(t) < self.position(s)
    }

    /// The defining triple condition: for all a < b < c, the positions of
    /// (a b), (a c), (b c) are monotone in one of the two allowed ways.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        if self.seq.len() != n * (n - 1) / 2 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for t in &self.seq {
            if t.j() > n || !seen.insert(*t) {
                return false;
            }
        }
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    let ab = self.position(Transposition::new(a, b));
                    let ac = self.position(Transposition::new(a, c));
                    let bc = self.position(Transposition::new(b, c));
                    let fwd = ab < ac && ac < bc;
                    let rev = bc < ac && ac < ab;
                    if !(fwd || rev) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Induced order on the transpositions of the embedded S_m, m ≤ n.
    pub fn restriction(&self, m: usize) -> Vec<Transposition> {
        self.seq.iter().filter(|t| t.j() <= m).copied().collect()
    }

    /// The lexicographically first reflection order of S_n.
    pub fn first(n: usize) -> ReflectionOrder {
        reflection_orders(n)
            .expect("guard admits small n")
            .next()
            .expect("at least one reduced word")
    }
}

impl std::fmt::Debug for ReflectionOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// Streams every reflection order of S_n exactly once, in lexicographic
/// order of the underlying reduced words of the longest element.
///
/// Guarded to n ≤ 6: the count is the number of reduced words of w₀
/// (1, 1, 2, 16, 768, 292864 for n = 1..=6) and grows explosively beyond.
pub fn reflection_orders(n: usize) -> Result<ReflectionOrderIter> {
    if n > 6 {
        return Err(Error::TooLarge { n, guard: 6, what: "reflection order enumeration" });
    }
    Ok(ReflectionOrderIter::new(n))
}

pub struct ReflectionOrderIter {
    n: usize,
    stack: Vec<Frame>,
    path: Vec<usize>,
}

struct Frame {
    remaining: Perm,
    descents: Vec<usize>,
    next: usize,
}

impl Frame {
    fn new(remaining: Perm) -> Frame {
        let descents = remaining.left_descents();
        Frame { remaining, descents, next: 0 }
    }
}

impl ReflectionOrderIter {
    fn new(n: usize) -> ReflectionOrderIter {
        ReflectionOrderIter {
            n,
            stack: vec![Frame::new(Perm::longest(n))],
            path: Vec::new(),
        }
    }

    /// Converts the current reduced word a₁…a_N of w₀ into its reflection
    /// order: t_k = (π(a_k) π(a_k+1)) for π the length-(k−1) prefix.
    fn order_from_path(&self) -> ReflectionOrder {
        let mut word: Vec<usize> = (1..=self.n).collect();
        let mut seq = Vec::with_capacity(self.path.len());
        for &a in &self.path {
            seq.push(Transposition::new(word[a - 1], word[a]));
            word.swap(a - 1, a);
        }
        debug_assert!(word.iter().enumerate().all(|(i, &x)| x == self.n - i));
        ReflectionOrder::from_seq_unchecked(self.n, seq)
    }
}

impl Iterator for ReflectionOrderIter {
    type Item = ReflectionOrder;

    fn next(&mut self) -> Option<ReflectionOrder> {
        loop {
            let top = self.stack.last_mut()?;
            if top.remaining.is_identity() {
                let order = self.order_from_path();
                self.stack.pop();
                self.path.pop();
                return Some(order);
            }
            if top.next < top.descents.len() {
                let a = top.descents[top.next];
                top.next += 1;
                let rem = top.remaining.left_mul(Transposition::simple(a));
                self.path.push(a);
                self.stack.push(Frame::new(rem));
            } else {
                self.stack.pop();
                self.path.pop();
            }
        }
    }
}

/// All directed paths a → b in Γ(u,v) whose label sequences strictly
/// increase in the given reflection order, as vertex-index sequences.
pub fn increasing_paths(
    graph: &BruhatGraph,
    order: &ReflectionOrder,
    a: usize,
    b: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![a];
    increasing_dfs(graph, order, b, None, &mut path, &mut out);
    out
}

fn increasing_dfs(
    graph: &BruhatGraph,
    order: &ReflectionOrder,
    b: usize,
    min_pos: Option<usize>,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let cur = *path.last().expect("path starts nonempty");
    if cur == b {
        out.push(path.clone());
        return; // edges only increase rank; nothing extends past b
    }
    for &(tgt, label) in graph.out_edges(cur) {
        if !graph.interval().leq(tgt, b) {
            continue;
        }
        let p = order.position(label);
        if min_pos.is_some_and(|m| p <= m) {
            continue;
        }
        path.push(tgt);
        increasing_dfs(graph, order, b, Some(p), path, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn s3_graph() -> BruhatGraph {
        BruhatGraph::from_perms(&p("123"), &p("321")).unwrap()
    }

    #[test]
    fn interval_basics() {
        let w = p("2143");
        let i = BruhatInterval::build(&w, &w).unwrap();
        assert_eq!(i.len(), 1);

        let full = BruhatInterval::build(&p("123"), &p("321")).unwrap();
        assert_eq!(full.len(), 6);

        // brute-force oracle for the element count of [1324, 3412]
        let u = p("1324");
        let v = p("3412");
        let expect = Perm::all(4)
            .filter(|x| u.bruhat_leq(x) && x.bruhat_leq(&v))
            .count();
        assert_eq!(expect, 10);
        assert_eq!(BruhatInterval::build(&u, &v).unwrap().len(), 10);

        assert!(BruhatInterval::build(&p("21"), &p("12")).is_err());
    }

    #[test]
    fn interval_leq_and_rank() {
        let i = BruhatInterval::build(&p("1234"), &p("3412")).unwrap();
        for a in 0..i.len() {
            assert!(i.leq(a, a));
            for b in 0..i.len() {
                assert_eq!(i.leq(a, b), i.element(a).bruhat_leq(i.element(b)));
            }
        }
        assert_eq!(i.rank(0), 0);
        assert_eq!(i.rank(i.len() - 1), i.length());
        assert_eq!(i.element(0), &p("1234"));
        assert_eq!(i.element(i.len() - 1), &p("3412"));
    }

    #[test]
    fn graph_of_s3() {
        let g = s3_graph();
        // Γ(123, 321) has 8 cover edges plus the long edge 123 → 321.
        assert_eq!(g.edge_count(), 9);
        let i = g.interval();
        let from_e: Vec<(String, String)> = g
            .out_edges(0)
            .iter()
            .map(|&(y, t)| (i.element(y).to_string(), t.to_string()))
            .collect();
        assert_eq!(
            from_e,
            vec![
                ("132".into(), "(2 3)".into()),
                ("213".into(), "(1 2)".into()),
                ("321".into(), "(1 3)".into()),
            ]
        );
        // single-point interval has no edges
        let g1 = BruhatGraph::from_perms(&p("231"), &p("231")).unwrap();
        assert_eq!(g1.edge_count(), 0);
    }

    #[test]
    fn edge_labels_conjugate_consistently() {
        let g = BruhatGraph::from_perms(&p("1234"), &p("4231")).unwrap();
        for x in 0..g.len() {
            for &(y, t) in g.out_edges(x) {
                let xw = g.interval().element(x);
                let yw = g.interval().element(y);
                assert_eq!(&t.to_perm(4).compose(xw), yw, "t∘x = y fails");
                assert_eq!(yw.compose(&xw.inverse()), t.to_perm(4));
                assert!(g.interval().rank(x) < g.interval().rank(y));
            }
        }
    }

    #[test]
    fn reflection_order_counts() {
        assert_eq!(reflection_orders(2).unwrap().count(), 1);
        assert_eq!(reflection_orders(3).unwrap().count(), 2);
        assert_eq!(reflection_orders(4).unwrap().count(), 16);
        assert_eq!(reflection_orders(5).unwrap().count(), 768);
        assert!(reflection_orders(7).is_err());
    }

    #[test]
    fn n3_orders_match_brute_force() {
        // oracle: filter all 3! total orders on the three transpositions
        let ts = Transposition::all(3);
        let brute: Vec<Vec<Transposition>> = ts
            .iter()
            .copied()
            .permutations(3)
            .filter(|seq| ReflectionOrder::from_seq(3, seq.clone()).is_ok())
            .collect();
        assert_eq!(brute.len(), 2);
        let enumerated: Vec<Vec<Transposition>> = reflection_orders(3)
            .unwrap()
            .map(|o| o.seq().to_vec())
            .collect();
        assert_eq!(brute.len(), enumerated.len());
        for seq in &enumerated {
            assert!(brute.contains(seq));
        }
    }

    #[test]
    fn every_emitted_order_is_valid_and_distinct() {
        for n in 2..=5 {
            let mut seen = std::collections::HashSet::new();
            for order in reflection_orders(n).unwrap() {
                assert!(order.is_valid());
                assert!(seen.insert(order.seq().to_vec()), "duplicate order");
            }
        }
    }

    #[test]
    fn increasing_paths_s3() {
        let g = s3_graph();
        let order = ReflectionOrder::from_seq(
            3,
            vec![
                Transposition::new(1, 2),
                Transposition::new(1, 3),
                Transposition::new(2, 3),
            ],
        )
        .unwrap();
        let paths = increasing_paths(&g, &order, 0, g.v_idx());
        let as_words: Vec<Vec<String>> = paths
            .iter()
            .map(|p| p.iter().map(|&i| g.interval().element(i).to_string()).collect())
            .collect();
        assert_eq!(as_words.len(), 2);
        assert!(as_words.contains(&vec!["123".to_string(), "321".to_string()]));
        assert!(as_words.contains(&vec![
            "123".to_string(),
            "213".to_string(),
            "231".to_string(),
            "321".to_string()
        ]));

        // trivial cases
        assert_eq!(increasing_paths(&g, &order, 2, 2).len(), 1); // empty path
        let incomparable = (g.interval().index_of(&p("213")).unwrap(),
                            g.interval().index_of(&p("132")).unwrap());
        assert_eq!(increasing_paths(&g, &order, incomparable.0, incomparable.1).len(), 0);
    }

    #[test]
    fn graph_dump_shape() {
        let g = s3_graph();
        let v = g.dump_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 9);
        assert_eq!(arr[0].as_array().unwrap().len(), 3);
    }
}
