//! Brauer and Temperley-Lieb diagram calculus: exact diagram products
//! with loop bookkeeping, presentation verification, the TL cell modules
//! on noncrossing half-diagrams, closed-form and trace characters,
//! semisimplicity predicates, and the Birman-Murakami-Wenzl parameter
//! relations.
//!
//! Loop coefficients live in Laurent polynomials rather than a numeric
//! parameter, so one computation covers all specializations and the
//! semisimplicity boundaries stay exact.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use serde::Serialize;

use crate::exact::{poly_divide_exact, LaurentPoly, MultiLaurent, Rational, Var};
use crate::shapes::{binomial_signed, count_updown, double_factorial_odd, Partition};
use crate::{Error, Result};

/// A Brauer diagram on `k` dots: a perfect matching on `2k` points.
/// Points `0..k` are the top row (left to right), points `k..2k` the
/// bottom row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BrauerDiagram {
    k: usize,
    /// `pairing[p]` is the unique partner of point `p`.
    pairing: Vec<usize>,
}

impl BrauerDiagram {
    /// Build from an explicit edge list on points `0..2k`.
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.len() != k {
            return Err(Error::BadInput(format!(
                "need exactly {k} edges, got {}",
                edges.len()
            )));
        }
        let mut pairing = vec![usize::MAX; 2 * k];
        for &(a, b) in edges {
            if a >= 2 * k || b >= 2 * k || a == b {
                return Err(Error::BadInput(format!("bad edge ({a},{b})")));
            }
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(Error::BadInput(format!("point reused in edge ({a},{b})")));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        Ok(BrauerDiagram { k, pairing })
    }

    pub fn identity(k: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
        Self::from_edges(k, &edges).expect("identity edges are disjoint")
    }

    /// The transposition diagram `s_i`, `1 <= i <= k-1`: strands `i` and
    /// `i+1` cross, all others vertical.
    pub fn s(k: usize, i: usize) -> Self {
        assert!((1..k).contains(&i));
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for j in 0..k {
            if j == i - 1 {
                edges.push((j, k + j + 1));
            } else if j == i {
                edges.push((j, k + j - 1));
            } else {
                edges.push((j, k + j));
            }
        }
        Self::from_edges(k, &edges).expect("crossing edges are disjoint")
    }

    /// The cap/cup diagram `e_i`, `1 <= i <= k-1`: a horizontal bar on
    /// top points `i, i+1` and on bottom points `i, i+1`.
    pub fn e(k: usize, i: usize) -> Self {
        assert!((1..k).contains(&i));
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for j in 0..k {
            if j == i - 1 {
                edges.push((j, j + 1));
                edges.push((k + j, k + j + 1));
            } else if j != i {
                edges.push((j, k + j));
            }
        }
        Self::from_edges(k, &edges).expect("cap/cup edges are disjoint")
    }

    /// The diagram of a permutation: top `i` is joined to bottom `w(i)`.
    pub fn from_permutation(w: &crate::symgroup::Permutation) -> Self {
        let k = w.size();
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, k + w.apply(i))).collect();
        Self::from_edges(k, &edges).expect("permutation edges are disjoint")
    }

    /// The element `d_2h`: `k - 2h` vertical strands followed by `h`
    /// nested cap/cup pairs on the last `2h` points.
    pub fn d2h(k: usize, h: usize) -> Result<Self> {
        if 2 * h > k {
            return Err(Error::BadInput(format!("2h = {} exceeds k = {k}", 2 * h)));
        }
        let mut edges: Vec<(usize, usize)> = (0..k - 2 * h).map(|i| (i, k + i)).collect();
        for t in 0..h {
            let (a, b) = (k - 2 * h + t, k - 1 - t);
            edges.push((a, b));
            edges.push((k + a, k + b));
        }
        Self::from_edges(k, &edges)
    }

    pub fn dots(&self) -> usize {
        self.k
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p]
    }

    /// Edges with both endpoints sorted, as a sorted list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.k);
        for p in 0..2 * self.k {
            let q = self.pairing[p];
            if p < q {
                out.push((p, q));
            }
        }
        out
    }

    /// Boundary position used for the planarity test: walking around the
    /// rectangle, top points left to right then bottom points right to
    /// left.
    fn boundary_pos(&self, p: usize) -> usize {
        if p < self.k {
            p
        } else {
            2 * self.k - 1 - (p - self.k)
        }
    }

    /// True when the diagram can be drawn without crossings.
    pub fn is_planar(&self) -> bool {
        let arcs: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.boundary_pos(a), self.boundary_pos(b));
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[i + 1..] {
                let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crossing {
                    return false;
                }
            }
        }
        true
    }

    /// All Brauer diagrams on `k` dots ((2k-1)!! of them).
    pub fn enumerate(k: usize) -> Result<Vec<BrauerDiagram>> {
        if k > 6 {
            return Err(Error::BoundExceeded(format!(
                "diagram enumeration limited to k <= 6, got {k}"
            )));
        }
        fn rec(points: &[usize], edges: &mut Vec<(usize, usize)>, k: usize, out: &mut Vec<BrauerDiagram>) {
            if points.is_empty() {
                out.push(BrauerDiagram::from_edges(k, edges).expect("matching is valid"));
                return;
            }
            let first = points[0];
            for idx in 1..points.len() {
                let mut rest: Vec<usize> = Vec::with_capacity(points.len() - 2);
                rest.extend_from_slice(&points[1..idx]);
                rest.extend_from_slice(&points[idx + 1..]);
                edges.push((first, points[idx]));
                rec(&rest, edges, k, out);
                edges.pop();
            }
        }
        let mut out = Vec::new();
        let points: Vec<usize> = (0..2 * k).collect();
        rec(&points, &mut Vec::new(), k, &mut out);
        Ok(out)
    }
}

/// Product of two Brauer diagrams: stack `d1` above `d2`, trace the
/// paths, and count the closed loops formed in the middle layer.
/// Returns the resulting diagram and the loop count `c`, so the algebra
/// product is `x^c * d`.
pub fn brauer_mul(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
    if d1.k != d2.k {
        return Err(Error::SizeMismatch(format!(
            "{} dots vs {} dots",
            d1.k, d2.k
        )));
    }
    let k = d1.k;
    // Node ids: 0..k result top, k..2k middle (d1 bottom = d2 top),
    // 2k..3k result bottom.
    let top = |i: usize| i;
    let mid = |i: usize| k + i;
    let bot = |i: usize| 2 * k + i;
    // Each node's neighbors: top/bottom have one, middle have two
    // (one from each diagram).
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 3 * k];
    for (a, b) in d1.edges() {
        let na = if a < k { top(a) } else { mid(a - k) };
        let nb = if b < k { top(b) } else { mid(b - k) };
        adj[na].push(nb);
        adj[nb].push(na);
    }
    for (a, b) in d2.edges() {
        let na = if a < k { mid(a) } else { bot(a - k) };
        let nb = if b < k { mid(b) } else { bot(b - k) };
        adj[na].push(nb);
        adj[nb].push(na);
    }
    let mut visited = vec![false; 3 * k];
    let mut edges = Vec::with_capacity(k);
    let external = |n: usize| n < k || n >= 2 * k;
    let as_result_point = |n: usize| if n < k { n } else { n - k };
    for start in (0..k).chain(2 * k..3 * k) {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0];
        while !external(cur) {
            visited[cur] = true;
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        visited[cur] = true;
        edges.push((as_result_point(start), as_result_point(cur)));
    }
    let mut loops = 0;
    for start in k..2 * k {
        if visited[start] {
            continue;
        }
        loops += 1;
        let mut prev = start;
        let mut cur = adj[start][0];
        visited[start] = true;
        while cur != start {
            visited[cur] = true;
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
    }
    Ok((BrauerDiagram::from_edges(k, &edges)?, loops))
}

/// An element of the Brauer (or Temperley-Lieb) algebra: a finite map
/// from diagrams to Laurent polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramElement {
    k: usize,
    terms: BTreeMap<BrauerDiagram, LaurentPoly>,
}

impl DiagramElement {
    pub fn zero(k: usize, var: Var) -> Self {
        let _ = var;
        DiagramElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(d: BrauerDiagram, var: Var) -> Self {
        let k = d.k;
        let mut terms = BTreeMap::new();
        terms.insert(d, LaurentPoly::one(var));
        DiagramElement { k, terms }
    }

    pub fn one(k: usize, var: Var) -> Self {
        Self::basis(BrauerDiagram::identity(k), var)
    }

    pub fn dots(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, d: &BrauerDiagram, var: Var) -> LaurentPoly {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(var))
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = DiagramElement {
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (d, k) in &self.terms {
            out.add_term(d.clone(), k.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product with loop weight `x`: each closed loop formed during
    /// diagram composition contributes a factor of `x`.
    pub fn mul(&self, other: &Self, x: &LaurentPoly) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::SizeMismatch("diagram sizes differ".into()));
        }
        let mut out = DiagramElement {
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = brauer_mul(d1, d2)?;
                let mut coeff = c1.mul(c2);
                for _ in 0..loops {
                    coeff = coeff.mul(x);
                }
                out.add_term(d, coeff);
            }
        }
        Ok(out)
    }
}

/// One verified relation of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// Report for a presentation check.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub k: usize,
    pub relations: Vec<RelationCheck>,
    pub all_hold: bool,
}

/// Verify every defining relation of the Brauer algebra on `k` dots as
/// an identity of diagram-algebra elements with symbolic loop weight.
pub fn brauer_presentation_check(k: usize) -> Result<PresentationReport> {
    if k > 8 {
        return Err(Error::BoundExceeded(format!(
            "presentation check limited to k <= 8, got {k}"
        )));
    }
    let x = LaurentPoly::var(Var::X);
    let s = |i: usize| DiagramElement::basis(BrauerDiagram::s(k, i), Var::X);
    let e = |i: usize| DiagramElement::basis(BrauerDiagram::e(k, i), Var::X);
    let one = DiagramElement::one(k, Var::X);
    let mul = |a: &DiagramElement, b: &DiagramElement| a.mul(b, &x).expect("same k");
    let mul3 = |a: &DiagramElement, b: &DiagramElement, c: &DiagramElement| mul(&mul(a, b), c);

    let mut relations = Vec::new();
    let mut check = |name: String, lhs: DiagramElement, rhs: DiagramElement| {
        relations.push(RelationCheck {
            relation: name,
            holds: lhs == rhs,
        });
    };

    for i in 1..k {
        check(format!("s{i}^2 = 1"), mul(&s(i), &s(i)), one.clone());
        check(
            format!("e{i}^2 = x e{i}"),
            mul(&e(i), &e(i)),
            e(i).scale(&x),
        );
        check(format!("e{i} s{i} = e{i}"), mul(&e(i), &s(i)), e(i));
        check(format!("s{i} e{i} = e{i}"), mul(&s(i), &e(i)), e(i));
    }
    for i in 1..k {
        for j in i + 2..k {
            check(
                format!("s{i} s{j} = s{j} s{i}"),
                mul(&s(i), &s(j)),
                mul(&s(j), &s(i)),
            );
            check(
                format!("s{i} e{j} = e{j} s{i}"),
                mul(&s(i), &e(j)),
                mul(&e(j), &s(i)),
            );
            check(
                format!("e{i} e{j} = e{j} e{i}"),
                mul(&e(i), &e(j)),
                mul(&e(j), &e(i)),
            );
        }
    }
    for i in 1..k.saturating_sub(1) {
        check(
            format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
            mul3(&s(i), &s(i + 1), &s(i)),
            mul3(&s(i + 1), &s(i), &s(i + 1)),
        );
        check(
            format!("e{i} e{} e{i} = e{i}", i + 1),
            mul3(&e(i), &e(i + 1), &e(i)),
            e(i),
        );
        check(
            format!("e{} e{i} e{} = e{}", i + 1, i + 1, i + 1),
            mul3(&e(i + 1), &e(i), &e(i + 1)),
            e(i + 1),
        );
        check(
            format!("s{i} e{} e{i} = s{} e{i}", i + 1, i + 1),
            mul3(&s(i), &e(i + 1), &e(i)),
            mul(&s(i + 1), &e(i)),
        );
        check(
            format!("e{} e{i} s{} = e{} s{i}", i + 1, i + 1, i + 1),
            mul3(&e(i + 1), &e(i), &s(i + 1)),
            mul(&e(i + 1), &s(i)),
        );
    }
    let all_hold = relations.iter().all(|r| r.holds);
    Ok(PresentationReport {
        k,
        relations,
        all_hold,
    })
}

/// Irreducible dimension data for the Brauer algebra `B_k(x)` (generic
/// `x`): dimensions by up-down walk counts, with the squared sum checked
/// against the diagram count `(2k-1)!!`.
#[derive(Clone, Debug, Serialize)]
pub struct BrauerDimReport {
    pub k: usize,
    pub dims: Vec<(Partition, BigInt)>,
    pub sum_of_squares: BigInt,
    pub diagram_count: BigInt,
    pub consistent: bool,
}

pub fn brauer_dims(k: usize) -> Result<BrauerDimReport> {
    if k > 8 {
        return Err(Error::BoundExceeded(format!(
            "Brauer dimension table limited to k <= 8, got {k}"
        )));
    }
    let mut dims = Vec::new();
    let mut sum_sq = BigInt::zero();
    let mut h = 0;
    while 2 * h <= k {
        let size = k - 2 * h;
        for lambda in Partition::all(size) {
            let d = count_updown(&lambda, k)?;
            sum_sq += &d * &d;
            dims.push((lambda, d));
        }
        h += 1;
    }
    let diagram_count = double_factorial_odd(k);
    let consistent = sum_sq == diagram_count;
    Ok(BrauerDimReport {
        k,
        dims,
        sum_of_squares: sum_sq,
        diagram_count,
        consistent,
    })
}

/// All planar (Temperley-Lieb) diagrams on `k` dots, generated directly
/// as noncrossing matchings in boundary order; there are Catalan(k) of
/// them.
pub fn tl_enumerate(k: usize) -> Result<Vec<BrauerDiagram>> {
    if k > 10 {
        return Err(Error::BoundExceeded(format!(
            "TL enumeration limited to k <= 10, got {k}"
        )));
    }
    // Boundary order: positions 0..2k around the rectangle; position p
    // corresponds to top p for p < k and bottom 2k-1-p otherwise. The
    // first free point pairs with a point at odd distance, splitting the
    // remainder into independent inside/outside segments.
    fn split_rec(
        segments: &[&[usize]],
        edges: &mut Vec<(usize, usize)>,
        k: usize,
        out: &mut Vec<BrauerDiagram>,
    ) {
        match segments.split_first() {
            None => out.push(BrauerDiagram::from_edges(k, edges).expect("noncrossing matching")),
            Some((seg, rest)) => {
                if seg.is_empty() {
                    split_rec(rest, edges, k, out);
                    return;
                }
                let first = seg[0];
                let mut idx = 1;
                while idx < seg.len() {
                    edges.push((first, seg[idx]));
                    let mut next: Vec<&[usize]> = vec![&seg[1..idx], &seg[idx + 1..]];
                    next.extend_from_slice(rest);
                    split_rec(&next, edges, k, out);
                    edges.pop();
                    idx += 2;
                }
            }
        }
    }
    // Points in boundary order, mapped back to diagram numbering.
    let positions: Vec<usize> = (0..2 * k)
        .map(|p| if p < k { p } else { k + (2 * k - 1 - p) })
        .collect();
    let mut out = Vec::new();
    if k == 0 {
        out.push(BrauerDiagram::identity(0));
        return Ok(out);
    }
    split_rec(&[&positions], &mut Vec::new(), k, &mut out);
    out.sort();
    Ok(out)
}

/// A planar half-diagram: a noncrossing partial matching of `k` points
/// with `t` unmatched "through" points, none of which sits under a cap.
/// These are the basis vectors of the TL cell module with `t` through
/// strands.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TLHalfDiagram {
    k: usize,
    caps: Vec<(usize, usize)>,
}

impl TLHalfDiagram {
    pub fn new(k: usize, mut caps: Vec<(usize, usize)>) -> Result<Self> {
        for c in caps.iter_mut() {
            if c.0 > c.1 {
                *c = (c.1, c.0);
            }
        }
        caps.sort_unstable();
        let mut used = vec![false; k];
        for &(a, b) in &caps {
            if b >= k || used[a] || used[b] || a == b {
                return Err(Error::BadInput(format!("bad cap ({a},{b})")));
            }
            used[a] = true;
            used[b] = true;
        }
        let h = TLHalfDiagram { k, caps };
        for (i, &(a, b)) in h.caps.iter().enumerate() {
            for &(c, d) in &h.caps[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(Error::BadInput("caps cross".into()));
                }
            }
        }
        for p in h.defects() {
            for &(a, b) in &h.caps {
                if a < p && p < b {
                    return Err(Error::BadInput(format!("defect {p} covered by ({a},{b})")));
                }
            }
        }
        Ok(h)
    }

    pub fn points(&self) -> usize {
        self.k
    }

    pub fn caps(&self) -> &[(usize, usize)] {
        &self.caps
    }

    /// Unmatched (through) points, in increasing order.
    pub fn defects(&self) -> Vec<usize> {
        let mut used = vec![false; self.k];
        for &(a, b) in &self.caps {
            used[a] = true;
            used[b] = true;
        }
        (0..self.k).filter(|&p| !used[p]).collect()
    }

    pub fn through_count(&self) -> usize {
        self.k - 2 * self.caps.len()
    }
}

/// The basis of the TL cell module on `k` points with `t` through
/// strands: all valid half-diagrams, in sorted order.
pub fn tl_half_basis(k: usize, t: usize) -> Result<Vec<TLHalfDiagram>> {
    if t > k || (k - t) % 2 != 0 {
        return Err(Error::BadInput(format!(
            "no half-diagrams on {k} points with {t} through strands"
        )));
    }
    // Stack discipline: scanning left to right, a point may open a cap,
    // close the most recent open cap, or be a defect when no cap is open.
    fn rec(
        pos: usize,
        k: usize,
        stack: &mut Vec<usize>,
        caps: &mut Vec<(usize, usize)>,
        defects: usize,
        out: &mut Vec<TLHalfDiagram>,
        t: usize,
    ) {
        if pos == k {
            if stack.is_empty() && defects == t {
                out.push(TLHalfDiagram::new(k, caps.clone()).expect("stack discipline is valid"));
            }
            return;
        }
        // open
        stack.push(pos);
        rec(pos + 1, k, stack, caps, defects, out, t);
        stack.pop();
        if let Some(&open) = stack.last() {
            stack.pop();
            caps.push((open, pos));
            rec(pos + 1, k, stack, caps, defects, out, t);
            caps.pop();
            stack.push(open);
        } else {
            rec(pos + 1, k, stack, caps, defects + 1, out, t);
        }
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut Vec::new(), 0, &mut out, t);
    out.sort();
    Ok(out)
}

/// Action of a planar diagram on a half-diagram basis vector: glue `d`
/// on top of `h`. Returns `None` when two defects merge (the through
/// count would drop, which the cell module sends to zero); otherwise the
/// image half-diagram together with the number of closed loops, each of
/// which contributes a factor of the loop parameter.
pub fn tl_module_action(
    d: &BrauerDiagram,
    h: &TLHalfDiagram,
) -> Result<Option<(TLHalfDiagram, usize)>> {
    if d.dots() != h.points() {
        return Err(Error::SizeMismatch(format!(
            "{} dots vs {} points",
            d.dots(),
            h.points()
        )));
    }
    if !d.is_planar() {
        return Err(Error::BadInput(
            "TL module action requires a planar diagram".into(),
        ));
    }
    let k = d.dots();
    // Nodes: 0..k = d's top (the output points), k..2k = glue layer
    // (d's bottom identified with h's points).
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * k];
    for (a, b) in d.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for &(a, b) in h.caps() {
        adj[k + a].push(k + b);
        adj[k + b].push(k + a);
    }
    let defect_flags = {
        let mut f = vec![false; 2 * k];
        for p in h.defects() {
            f[k + p] = true;
        }
        f
    };
    let terminal = |n: usize| n < k || defect_flags[n];

    let mut visited = vec![false; 2 * k];
    let mut new_caps = Vec::new();
    let mut defect_hits = 0usize;
    for start in 0..k {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0];
        while !terminal(cur) {
            visited[cur] = true;
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        visited[cur] = true;
        if cur < k {
            new_caps.push((start, cur));
        } else {
            defect_hits += 1;
        }
    }
    if defect_hits != h.through_count() {
        // Some pair of defects was joined by the diagram: the image has
        // fewer through strands and is zero in the cell module.
        return Ok(None);
    }
    // Remaining unvisited glue nodes lie on closed loops.
    let mut loops = 0;
    for start in k..2 * k {
        if visited[start] || defect_flags[start] {
            continue;
        }
        loops += 1;
        let mut prev = start;
        let mut cur = adj[start][0];
        visited[start] = true;
        while cur != start {
            visited[cur] = true;
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
    }
    let image = TLHalfDiagram::new(k, new_caps)?;
    Ok(Some((image, loops)))
}

/// The closed-form TL character: the trace of `d_2h` on the cell module
/// `T^((k-l, l))`, given by the ballot-number difference
/// `C(k-2h, l-h) - C(k-2h, l-h-1)`, and zero when `l < h`.
pub fn tl_character_closed(k: usize, l: usize, h: usize) -> Result<BigInt> {
    if 2 * l > k || 2 * h > k {
        return Err(Error::BadInput(format!(
            "need 0 <= 2l <= k and 0 <= 2h <= k, got l = {l}, h = {h}, k = {k}"
        )));
    }
    if l < h {
        return Ok(BigInt::zero());
    }
    let n = k - 2 * h;
    Ok(binomial_signed(n, l as i64 - h as i64) - binomial_signed(n, l as i64 - h as i64 - 1))
}

/// Trace of a diagram-algebra element (restricted to planar diagrams)
/// on the cell module with `t = k - 2l` through strands. Loop factors
/// stay symbolic in the element's coefficient variable.
pub fn tl_character_general(a: &DiagramElement, l: usize, var: Var) -> Result<LaurentPoly> {
    let k = a.dots();
    if 2 * l > k {
        return Err(Error::BadInput(format!("need 2l <= k, got l = {l}, k = {k}")));
    }
    if k > 8 {
        return Err(Error::BoundExceeded(format!(
            "general TL character limited to k <= 8, got {k}"
        )));
    }
    let x = LaurentPoly::var(var);
    let basis = tl_half_basis(k, k - 2 * l)?;
    let mut trace = LaurentPoly::zero(var);
    for h in &basis {
        for (d, c) in a.terms() {
            if let Some((image, loops)) = tl_module_action(d, h)? {
                if &image == h {
                    let mut term = c.clone();
                    for _ in 0..loops {
                        term = term.mul(&x);
                    }
                    trace = trace.add(&term);
                }
            }
        }
    }
    Ok(trace)
}

/// Brauer semisimplicity (sufficient condition): `B_k(x)` is semisimple
/// whenever `x` avoids the integer window `{-2k+3, ..., k-2}`.
pub fn brauer_semisimple(x: &Rational, k: usize) -> bool {
    let Some(v) = crate::exact::as_integer(x) else {
        return true;
    };
    if k < 2 {
        return true;
    }
    let lo = BigInt::from(-2 * (k as i64) + 3);
    let hi = BigInt::from(k as i64 - 2);
    !(lo <= v && v <= hi)
}

/// Temperley-Lieb semisimplicity, following the stated criterion
/// verbatim: `TL_k(x)` is semisimple iff `1/x^2 != 4 cos^2(pi/l)` for
/// every `2 <= l <= k`. Over the rationals the right side takes the
/// rational values 0, 1, 2, 3 (at l = 2, 3, 4, 6), so only
/// `1/x^2 = 1` (i.e. `x = +-1`, reachable at `l = 3`) can trigger.
/// Requires `x != 0` (the loop parameter is invertible).
pub fn tl_semisimple(x: &Rational, k: usize) -> bool {
    assert!(!x.is_zero(), "loop parameter must be nonzero");
    let inv_sq = (x * x).recip();
    for l in 2..=k as u64 {
        let value = match l {
            2 => Some(Rational::zero()),
            3 => Some(Rational::one()),
            4 => Some(crate::exact::rat(2)),
            6 => Some(crate::exact::rat(3)),
            _ => None, // 4 cos^2(pi/l) is irrational for the other l
        };
        if let Some(v) = value {
            if inv_sq == v {
                return false;
            }
        }
    }
    true
}

/// Exact descriptions of the BMW parameter `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BmwQ {
    /// An indeterminate (never a root of unity).
    Generic,
    Rational(Rational),
    /// A primitive `j`-th root of unity.
    PrimitiveRoot(u64),
}

/// Exact descriptions of the BMW parameter `r` relative to `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BmwR {
    /// An indeterminate independent of `q`.
    Generic,
    /// `r = q^m` for the given integer `m`.
    PowerOfQ(i64),
    Rational(Rational),
}

/// BMW semisimplicity (sufficient condition): semisimple when `q` is
/// not a root of unity and `r != q^(n+1)` for every integer `n`.
/// Returns `false` whenever the stated condition cannot be certified.
pub fn bmw_semisimple(r: &BmwR, q: &BmwQ) -> bool {
    let q_ok = match q {
        BmwQ::Generic => true,
        BmwQ::PrimitiveRoot(_) => false,
        BmwQ::Rational(v) => {
            !v.is_zero() && *v != Rational::one() && *v != -Rational::one()
        }
    };
    if !q_ok {
        return false;
    }
    match (r, q) {
        (BmwR::Generic, _) => true,
        // Any integer power of q is q^(n+1) for some integer n.
        (BmwR::PowerOfQ(_), _) => false,
        (BmwR::Rational(rv), BmwQ::Rational(qv)) => {
            if rv.is_zero() {
                return true;
            }
            // Search r = q^m over a bounded window; |q| != 0, 1 here, so
            // powers are strictly monotone in magnitude.
            for m in -64i64..=64 {
                let mut p = Rational::one();
                for _ in 0..m.unsigned_abs() {
                    p *= qv;
                }
                if m < 0 {
                    p = p.recip();
                }
                if p == *rv {
                    return false;
                }
            }
            true
        }
        (BmwR::Rational(_), BmwQ::Generic) => true,
        (BmwR::Rational(_), BmwQ::PrimitiveRoot(_)) => false,
    }
}

/// The BMW presentation together with the derived loop value
/// `x = (r - r^-1)/(q - q^-1) + 1`, kept as an exact two-variable
/// rational expression (variables ordered `(r, q)`).
#[derive(Clone, Debug)]
pub struct BmwRelationData {
    pub relations: Vec<String>,
    /// Numerator of `x` over the variables `(r, q)`.
    pub x_numerator: MultiLaurent,
    /// Denominator of `x`.
    pub x_denominator: MultiLaurent,
    /// `x` after substituting `r = q`: the constant 2.
    pub x_at_r_equals_q: LaurentPoly,
    /// Whether `x` is invariant under `(r, q) -> (-r^-1, -q^-1)`;
    /// recorded as a computed fact, not asserted.
    pub x_symmetric_under_negated_inversion: bool,
}

/// Build the BMW relation record. The relations list is documentation;
/// the parameter identity is computed exactly.
pub fn bmw_relation_data() -> Result<BmwRelationData> {
    let relations = vec![
        "gi g(i+1) gi = g(i+1) gi g(i+1)".to_string(),
        "gi gj = gj gi for |i-j| >= 2".to_string(),
        "(gi - r^-1)(gi + q^-1)(gi - q) = 0".to_string(),
        "Ei g(i-1)^(+-1) Ei = r^(+-1) Ei".to_string(),
        "Ei g(i+1)^(+-1) Ei = r^(+-1) Ei".to_string(),
        "(q - q^-1)(1 - Ei) = gi - gi^-1".to_string(),
        "x = (r - r^-1)/(q - q^-1) + 1".to_string(),
    ];
    let term = |r_exp: i64, q_exp: i64, c: i64| {
        MultiLaurent::monomial(vec![r_exp, q_exp], crate::exact::rat(c))
    };
    // x = [(r - r^-1) + (q - q^-1)] / (q - q^-1)
    let x_num = term(1, 0, 1)
        .add(&term(-1, 0, -1))
        .add(&term(0, 1, 1))
        .add(&term(0, -1, -1));
    let x_den = term(0, 1, 1).add(&term(0, -1, -1));

    // Substitute r = q: exponent vectors (a, b) collapse to a + b.
    let collapse = |p: &MultiLaurent| -> MultiLaurent {
        let mut out = MultiLaurent::zero(1);
        for (e, c) in p.iter() {
            out = out.add(&MultiLaurent::monomial(vec![e[0] + e[1]], c.clone()));
        }
        out
    };
    let quotient = poly_divide_exact(&collapse(&x_num), &collapse(&x_den))?;
    let mut x_at_r_equals_q = LaurentPoly::zero(Var::Q);
    for (e, c) in quotient.iter() {
        x_at_r_equals_q = x_at_r_equals_q.add(&LaurentPoly::monomial(Var::Q, e[0], c.clone()));
    }

    // (r, q) -> (-r^-1, -q^-1): r^a q^b -> (-1)^(a+b) r^-a q^-b.
    let invert = |p: &MultiLaurent| -> MultiLaurent {
        let mut out = MultiLaurent::zero(2);
        for (e, c) in p.iter() {
            let sign = if (e[0] + e[1]).rem_euclid(2) == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            out = out.add(&MultiLaurent::monomial(vec![-e[0], -e[1]], sign));
        }
        out
    };
    // x = num/den is invariant iff num' * den == den' * num.
    let symmetric = invert(&x_num).mul(&x_den) == invert(&x_den).mul(&x_num);

    Ok(BmwRelationData {
        relations,
        x_numerator: x_num,
        x_denominator: x_den,
        x_at_r_equals_q,
        x_symmetric_under_negated_inversion: symmetric,
    })
}

/// Numeric evaluation of the BMW loop value at exact parameters;
/// requires `q` distinct from `0, 1, -1` so that `q - q^-1` is
/// invertible.
pub fn bmw_x_at(r: &Rational, q: &Rational) -> Result<Rational> {
    if q.is_zero() || *q == Rational::one() || *q == -Rational::one() {
        return Err(Error::BadInput(format!("degenerate q = {q}")));
    }
    if r.is_zero() {
        return Err(Error::BadInput("r must be invertible".into()));
    }
    let qq = q - q.recip();
    Ok((r - r.recip()) / qq + Rational::one())
}

/// Report of the Hecke-to-TL homomorphism check: the three Hecke
/// relations on the images `T_i -> a E_i - 1` and the annihilation of
/// the listed kernel element.
#[derive(Clone, Debug, Serialize)]
pub struct TlHomReport {
    pub k: usize,
    pub quadratic: bool,
    pub commuting: bool,
    pub braid: bool,
    pub kernel_annihilated: bool,
    pub all_hold: bool,
}

/// Check that `T_i -> a E_i - 1` defines a Hecke algebra homomorphism
/// into `TL_k` with loop weight `x`, where the Hecke parameter is `q`
/// and all three of `a`, `q`, `x` live in one Laurent ring.
pub fn hecke_to_tl_check(
    k: usize,
    a: &LaurentPoly,
    q: &LaurentPoly,
    x: &LaurentPoly,
) -> Result<TlHomReport> {
    if k > 4 {
        return Err(Error::BoundExceeded(format!(
            "homomorphism check limited to k <= 4, got {k}"
        )));
    }
    let var = a.variable();
    let one = DiagramElement::one(k, var);
    let image = |i: usize| {
        DiagramElement::basis(BrauerDiagram::e(k, i), var)
            .scale(a)
            .sub(&one)
    };
    let mul = |u: &DiagramElement, v: &DiagramElement| u.mul(v, x).expect("same k");

    let q_minus_1 = q.sub(&LaurentPoly::one(var));
    let mut quadratic = true;
    let mut commuting = true;
    let mut braid = true;
    let mut kernel = true;
    for i in 1..k {
        let t = image(i);
        let lhs = mul(&t, &t);
        let rhs = t.scale(&q_minus_1).add(&one.scale(q));
        quadratic &= lhs == rhs;
    }
    for i in 1..k {
        for j in i + 2..k {
            let (ti, tj) = (image(i), image(j));
            commuting &= mul(&ti, &tj) == mul(&tj, &ti);
        }
    }
    for i in 1..k.saturating_sub(1) {
        let (ti, tj) = (image(i), image(i + 1));
        braid &= mul(&mul(&ti, &tj), &ti) == mul(&mul(&tj, &ti), &tj);
        // T_i T_{i+1} T_i + T_i T_{i+1} + T_{i+1} T_i + T_i + T_{i+1} + 1
        let kernel_el = mul(&mul(&ti, &tj), &ti)
            .add(&mul(&ti, &tj))
            .add(&mul(&tj, &ti))
            .add(&ti)
            .add(&tj)
            .add(&one);
        kernel &= kernel_el.is_zero();
    }
    let all_hold = quadratic && commuting && braid && kernel;
    Ok(TlHomReport {
        k,
        quadratic,
        commuting,
        braid,
        kernel_annihilated: kernel,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::symgroup::Permutation;

    fn catalan(k: usize) -> BigInt {
        crate::shapes::binomial(2 * k, k) / BigInt::from(k + 1)
    }

    #[test]
    fn identity_times_identity() {
        let id = BrauerDiagram::identity(4);
        let (d, c) = brauer_mul(&id, &id).unwrap();
        assert_eq!(d, id);
        assert_eq!(c, 0);
    }

    #[test]
    fn cap_cup_squares_with_one_loop() {
        for k in 2..=5 {
            for i in 1..k {
                let e = BrauerDiagram::e(k, i);
                let (d, c) = brauer_mul(&e, &e).unwrap();
                assert_eq!(d, e);
                assert_eq!(c, 1);
            }
        }
    }

    #[test]
    fn seven_dot_product_with_two_loops() {
        // d1 has two bottom bars that close against two top bars of d2.
        let k = 7;
        let d1 = BrauerDiagram::from_edges(
            k,
            &[(0, 1), (2, 3), (4, 5), (6, 11), (7, 8), (9, 10), (12, 13)],
        )
        .unwrap();
        let d2 = BrauerDiagram::from_edges(
            k,
            &[(0, 1), (2, 3), (4, 7), (5, 8), (6, 9), (10, 11), (12, 13)],
        )
        .unwrap();
        let (d, c) = brauer_mul(&d1, &d2).unwrap();
        assert_eq!(c, 2);
        let expect = BrauerDiagram::from_edges(
            k,
            &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)],
        )
        .unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn permutation_diagrams_compose_as_permutations() {
        for u in Permutation::all(4) {
            for v in [
                Permutation::adjacent(4, 1),
                Permutation::adjacent(4, 3),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ] {
                let (d, c) = brauer_mul(
                    &BrauerDiagram::from_permutation(&u),
                    &BrauerDiagram::from_permutation(&v),
                )
                .unwrap();
                assert_eq!(c, 0);
                assert_eq!(d, BrauerDiagram::from_permutation(&v.compose(&u)));
            }
        }
    }

    #[test]
    fn diagram_count_matches_double_factorial() {
        for k in 1..=5 {
            let all = BrauerDiagram::enumerate(k).unwrap();
            assert_eq!(BigInt::from(all.len()), double_factorial_odd(k), "k = {k}");
        }
    }

    #[test]
    fn product_associativity_sampled() {
        let x = LaurentPoly::var(Var::X);
        // Deterministic pseudo-random triples, including loop-heavy
        // compositions at k = 5 and 6.
        let mut state = 0x9e3779b97f4a7c15u64;
        for k in 2..=6usize {
            let all = BrauerDiagram::enumerate(k).unwrap();
            for _ in 0..20 {
                let mut pick = || {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    (state >> 33) as usize % all.len()
                };
                let (a, b, c) = (all[pick()].clone(), all[pick()].clone(), all[pick()].clone());
                let ea = DiagramElement::basis(a, Var::X);
                let eb = DiagramElement::basis(b, Var::X);
                let ec = DiagramElement::basis(c, Var::X);
                let lhs = ea.mul(&eb, &x).unwrap().mul(&ec, &x).unwrap();
                let rhs = ea.mul(&eb.mul(&ec, &x).unwrap(), &x).unwrap();
                assert_eq!(lhs, rhs, "k = {k}");
            }
        }
    }

    #[test]
    fn brauer_presentation_holds_small() {
        for k in 2..=5 {
            let report = brauer_presentation_check(k).unwrap();
            for r in &report.relations {
                assert!(r.holds, "k = {k}: {}", r.relation);
            }
            assert!(report.all_hold);
        }
    }

    #[test]
    fn brauer_dims_small_cases() {
        let r = brauer_dims(2).unwrap();
        assert_eq!(r.dims.len(), 3);
        assert_eq!(r.sum_of_squares, BigInt::from(3));
        assert!(r.consistent);

        let r = brauer_dims(1).unwrap();
        assert_eq!(r.dims.len(), 1);
        assert_eq!(r.sum_of_squares, BigInt::one());

        let r = brauer_dims(3).unwrap();
        assert_eq!(r.sum_of_squares, BigInt::from(15));
        assert!(r.consistent);
    }

    #[test]
    fn brauer_dims_match_enumerated_diagrams() {
        for k in 1..=5 {
            let r = brauer_dims(k).unwrap();
            assert!(r.consistent);
            assert_eq!(
                r.diagram_count,
                BigInt::from(BrauerDiagram::enumerate(k).unwrap().len()),
                "k = {k}"
            );
        }
    }

    #[test]
    fn tl_enumeration_is_catalan() {
        for k in 1..=7 {
            let planar = tl_enumerate(k).unwrap();
            assert_eq!(BigInt::from(planar.len()), catalan(k), "k = {k}");
            for d in &planar {
                assert!(d.is_planar());
            }
        }
        assert_eq!(tl_enumerate(2).unwrap().len(), 2);
        assert_eq!(tl_enumerate(3).unwrap().len(), 5);
    }

    #[test]
    fn tl_enumeration_agrees_with_planar_filter() {
        for k in 1..=5 {
            let filtered: Vec<BrauerDiagram> = BrauerDiagram::enumerate(k)
                .unwrap()
                .into_iter()
                .filter(BrauerDiagram::is_planar)
                .collect();
            let mut direct = tl_enumerate(k).unwrap();
            direct.sort();
            let mut filtered = filtered;
            filtered.sort();
            assert_eq!(direct, filtered, "k = {k}");
        }
    }

    #[test]
    fn half_diagram_dimensions_are_ballot_numbers() {
        for k in 1..=8usize {
            for l in 0..=k / 2 {
                let t = k - 2 * l;
                let basis = tl_half_basis(k, t).unwrap();
                let expect = crate::shapes::binomial(k, l)
                    - binomial_signed(k, l as i64 - 1);
                assert_eq!(BigInt::from(basis.len()), expect, "k = {k}, l = {l}");
            }
        }
    }

    #[test]
    fn half_diagram_validation() {
        assert!(TLHalfDiagram::new(4, vec![(0, 3), (1, 2)]).is_ok());
        // crossing caps
        assert!(TLHalfDiagram::new(4, vec![(0, 2), (1, 3)]).is_err());
        // covered defect
        assert!(TLHalfDiagram::new(3, vec![(0, 2)]).is_err());
    }

    #[test]
    fn module_action_examples() {
        // identity acts as identity
        let h = TLHalfDiagram::new(2, vec![(0, 1)]).unwrap();
        let (img, loops) = tl_module_action(&BrauerDiagram::identity(2), &h)
            .unwrap()
            .unwrap();
        assert_eq!(img, h);
        assert_eq!(loops, 0);

        // e1 on the two-through-strand half-diagram: through count drops.
        let through = TLHalfDiagram::new(2, vec![]).unwrap();
        assert!(tl_module_action(&BrauerDiagram::e(2, 1), &through)
            .unwrap()
            .is_none());

        // e1 on the cap: one loop closes, same half-diagram.
        let (img, loops) = tl_module_action(&BrauerDiagram::e(2, 1), &h)
            .unwrap()
            .unwrap();
        assert_eq!(img, h);
        assert_eq!(loops, 1);
    }

    #[test]
    fn closed_character_examples() {
        // h = 0: the module dimension.
        assert_eq!(tl_character_closed(4, 1, 0).unwrap(), BigInt::from(3));
        assert_eq!(tl_character_closed(3, 1, 1).unwrap(), BigInt::one());
        assert_eq!(tl_character_closed(4, 2, 1).unwrap(), BigInt::one());
        // l < h: zero.
        assert_eq!(tl_character_closed(4, 0, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn general_trace_examples() {
        // identity trace = module dimension
        let id = DiagramElement::one(4, Var::X);
        let tr = tl_character_general(&id, 1, Var::X).unwrap();
        assert_eq!(tr, LaurentPoly::constant(Var::X, rat(3)));

        // e1 on k = 2: trace x on the cap module, 0 on the through module.
        let e1 = DiagramElement::basis(BrauerDiagram::e(2, 1), Var::X);
        assert_eq!(
            tl_character_general(&e1, 1, Var::X).unwrap(),
            LaurentPoly::var(Var::X)
        );
        assert!(tl_character_general(&e1, 0, Var::X).unwrap().is_zero());
    }

    #[test]
    fn trace_on_d2h_matches_closed_form_with_x_power() {
        for k in 1..=6usize {
            for l in 0..=k / 2 {
                for h in 0..=k / 2 {
                    let d = DiagramElement::basis(BrauerDiagram::d2h(k, h).unwrap(), Var::X);
                    let trace = tl_character_general(&d, l, Var::X).unwrap();
                    let closed = tl_character_closed(k, l, h).unwrap();
                    let expect = LaurentPoly::monomial(
                        Var::X,
                        h as i64,
                        Rational::from_integer(closed),
                    );
                    assert_eq!(trace, expect, "k = {k}, l = {l}, h = {h}");
                }
            }
        }
    }

    #[test]
    fn tl_module_dim_squares_sum_to_catalan() {
        for k in 1..=8usize {
            let mut total = BigInt::zero();
            for l in 0..=k / 2 {
                let d = BigInt::from(tl_half_basis(k, k - 2 * l).unwrap().len());
                total += &d * &d;
            }
            assert_eq!(total, catalan(k), "k = {k}");
        }
    }

    #[test]
    fn brauer_semisimple_window() {
        assert!(brauer_semisimple(&rat(10), 3));
        assert!(!brauer_semisimple(&rat(1), 3));
        assert!(!brauer_semisimple(&rat(-3), 3));
        assert!(brauer_semisimple(&rat(2), 3));
        assert!(brauer_semisimple(&ratio(1, 2), 3));
        assert!(brauer_semisimple(&rat(0), 1));
        assert!(!brauer_semisimple(&rat(0), 2));
    }

    #[test]
    fn tl_semisimple_values() {
        assert!(!tl_semisimple(&rat(1), 3));
        assert!(!tl_semisimple(&rat(-1), 3));
        assert!(tl_semisimple(&rat(1), 2)); // window starts at l = 3 for the value 1
        assert!(tl_semisimple(&rat(2), 10));
        assert!(tl_semisimple(&ratio(1, 2), 10));
        assert!(tl_semisimple(&ratio(7, 3), 10));
    }

    #[test]
    fn bmw_semisimple_values() {
        assert!(bmw_semisimple(&BmwR::Generic, &BmwQ::Generic));
        assert!(!bmw_semisimple(&BmwR::PowerOfQ(5), &BmwQ::Generic));
        assert!(!bmw_semisimple(&BmwR::Generic, &BmwQ::PrimitiveRoot(3)));
        assert!(!bmw_semisimple(&BmwR::Generic, &BmwQ::Rational(rat(1))));
        assert!(bmw_semisimple(
            &BmwR::Rational(rat(5)),
            &BmwQ::Rational(rat(2))
        ));
        assert!(!bmw_semisimple(
            &BmwR::Rational(rat(8)),
            &BmwQ::Rational(rat(2))
        ));
        assert!(!bmw_semisimple(
            &BmwR::Rational(ratio(1, 4)),
            &BmwQ::Rational(rat(2))
        ));
    }

    #[test]
    fn bmw_relation_record() {
        let data = bmw_relation_data().unwrap();
        assert_eq!(data.relations.len(), 7);
        // r = q gives x = 2.
        assert_eq!(
            data.x_at_r_equals_q,
            LaurentPoly::constant(Var::Q, rat(2))
        );
        assert!(data.x_symmetric_under_negated_inversion);
        // Numeric spot check: q = 2, r = 3 -> (8/3)/(3/2) + 1 = 25/9.
        assert_eq!(bmw_x_at(&rat(3), &rat(2)).unwrap(), ratio(25, 9));
        assert!(bmw_x_at(&rat(3), &rat(1)).is_err());
    }

    #[test]
    fn hecke_to_tl_standard_reading_passes() {
        // q = t^2, x = t + t^-1, a = (q+1)/x = t.
        let a = LaurentPoly::var(Var::T);
        let q = LaurentPoly::monomial(Var::T, 2, rat(1));
        let x = LaurentPoly::monomial(Var::T, 1, rat(1))
            .add(&LaurentPoly::monomial(Var::T, -1, rat(1)));
        for k in 2..=4 {
            let report = hecke_to_tl_check(k, &a, &q, &x).unwrap();
            assert!(report.all_hold, "k = {k}: {report:?}");
        }
    }

    #[test]
    fn hecke_to_tl_printed_reading_fails() {
        // The printed relation q + q^-1 + 2 = 1/x^2 at q = 4 forces
        // x = +-2/5 and a = (q+1)/x = +-25/2; the braid relation breaks.
        for x_val in [ratio(2, 5), ratio(-2, 5)] {
            let a = LaurentPoly::constant(Var::T, rat(5) / &x_val);
            let q = LaurentPoly::constant(Var::T, rat(4));
            let x = LaurentPoly::constant(Var::T, x_val);
            let report = hecke_to_tl_check(3, &a, &q, &x).unwrap();
            assert!(report.quadratic); // the quadratic relation holds for any a
            assert!(!report.braid);
            assert!(!report.all_hold);
        }
    }

    #[test]
    fn d2h_shape() {
        let d = BrauerDiagram::d2h(5, 1).unwrap();
        assert!(d.is_planar());
        assert_eq!(d.partner(3), 4);
        assert_eq!(d.partner(0), 5);
        let d = BrauerDiagram::d2h(4, 2).unwrap();
        // nested: (0,3) and (1,2) on top
        assert_eq!(d.partner(0), 3);
        assert_eq!(d.partner(1), 2);
        assert!(BrauerDiagram::d2h(3, 2).is_err());
    }
}
