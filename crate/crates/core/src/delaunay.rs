//! Randomized incremental Delaunay triangulation.
//!
//! Vertices are the input indices `0..n`; the symbolic infinite vertex is `n`.
//! Every hull edge `u -> w` (counterclockwise along the hull) borders the
//! infinite face `(w, u, ∞)`, so together with the finite triangles the faces
//! tile a sphere and every face has exactly three neighbours.
//!
//! Faces store their vertices counterclockwise; `n[i]` is the face across the
//! edge opposite `v[i]`. Faces are never removed: a split appends faces and a
//! flip rewrites the two faces in place.
//!
//! Points are inserted in a biased randomized order by default: random rounds
//! of geometrically growing size, each sorted along a Hilbert curve, so that
//! consecutive points are close and the walk below stays short.
//!
//! Insertion (Lawson): locate the new point by a visibility walk from the
//! previously inserted vertex, split the containing face (or edge), then flip
//! edges opposite the new vertex while the face beyond them conflicts with it.
//! Cocircular points do not conflict, so among equally valid completions the
//! existing triangles are kept.
//!
//! Inputs that are all collinear produce a one-dimensional triangulation, the
//! sorted chain of points. A single point has dimension zero.

use std::collections::HashMap;
use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::point::{check_finite, ExactKey, Point};
use crate::predicates::{ArithmeticMode, Kernel, PredicateStats, Sign};
use crate::scalar::Scalar;
use crate::spectrum::Spectrum;

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    /// Coinciding points are an error.
    #[default]
    Reject,
    /// A coinciding point becomes an alias of the existing vertex. The
    /// restoration pass still runs over that vertex's star, as a general
    /// incremental kernel does, so each duplicate costs Θ(degree).
    Merge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    /// Point `i` joins round `r` with probability `2^-(r+1)`; rounds run from
    /// the sparsest to the densest and each is sorted along a Hilbert curve.
    #[default]
    Brio,
    /// Uniform random permutation. Walks then cost Θ(√n) each on average.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub seed: u64,
    pub mode: ArithmeticMode,
    pub duplicates: DuplicatePolicy,
    pub order: InsertionOrder,
    /// Verify all structural invariants after every insertion (slow).
    pub check_each_insertion: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            mode: ArithmeticMode::Filtered,
            duplicates: DuplicatePolicy::Reject,
            order: InsertionOrder::Brio,
            check_each_insertion: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaunayEdge<T> {
    pub a: usize,
    pub b: usize,
    pub squared_length: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Face {
    v: [usize; 3],
    n: [usize; 3],
}

impl Face {
    fn index_of(&self, v: usize) -> Option<usize> {
        self.v.iter().position(|&x| x == v)
    }

    fn neighbour_index(&self, f: usize) -> Option<usize> {
        self.n.iter().position(|&x| x == f)
    }
}

#[inline]
fn next(i: usize) -> usize {
    if i == 2 {
        0
    } else {
        i + 1
    }
}

#[inline]
fn prev(i: usize) -> usize {
    if i == 0 {
        2
    } else {
        i - 1
    }
}

enum Location {
    Face(usize),
    /// On the interior of the edge opposite `v[i]` of a finite face.
    Edge(usize, usize),
    Vertex(usize),
    /// Strictly outside the hull, beyond the finite edge of this infinite face.
    Outside(usize),
}

#[derive(Debug, Clone)]
pub struct Triangulation<T> {
    points: Vec<Point<T>>,
    faces: Vec<Face>,
    vertex_face: Vec<usize>,
    alias: Vec<Option<usize>>,
    /// Sorted vertices when the dimension is below two.
    chain: Vec<usize>,
    dimension: u8,
    stats: PredicateStats,
}

struct Builder<'a, T: Scalar> {
    t: Triangulation<T>,
    kernel: Kernel<T>,
    rng: ChaCha8Rng,
    opts: &'a BuildOptions,
    stack: Vec<usize>,
}

impl<T: Scalar> Triangulation<T> {
    /// Triangulates the representatives of a spectrum.
    pub fn build(s: &Spectrum<T>, opts: &BuildOptions) -> Result<Self> {
        Self::from_points(s.points(), opts)
    }

    pub fn from_points(points: &[Point<T>], opts: &BuildOptions) -> Result<Self> {
        Self::build_with_deadline(points, opts, &Deadline::none())
    }

    pub(crate) fn build_with_deadline(
        points: &[Point<T>],
        opts: &BuildOptions,
        deadline: &Deadline,
    ) -> Result<Self> {
        check_finite(points)?;
        if points.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        let n = points.len();
        let mut b = Builder {
            t: Triangulation {
                points: points.to_vec(),
                faces: Vec::with_capacity(2 * n + 2),
                vertex_face: vec![NIL; n + 1],
                alias: vec![None; n],
                chain: Vec::new(),
                dimension: 0,
                stats: PredicateStats::default(),
            },
            kernel: Kernel::new(opts.mode),
            rng: ChaCha8Rng::seed_from_u64(opts.seed),
            opts,
            stack: Vec::new(),
        };
        let order = insertion_order(points, opts.order, &mut b.rng);
        b.run(&order, deadline)?;
        let mut t = b.t;
        t.stats = b.kernel.stats();
        Ok(t)
    }

    /// 0 for a single distinct point, 1 when all points are collinear, else 2.
    pub fn dimension(&self) -> u8 {
        self.dimension
    }

    /// Number of input points, including aliases.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of distinct vertices.
    pub fn num_vertices(&self) -> usize {
        self.alias.iter().filter(|a| a.is_none()).count()
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn infinite_vertex(&self) -> usize {
        self.points.len()
    }

    /// The vertex that input `i` was merged into, or `i` itself.
    pub fn representative(&self, i: usize) -> usize {
        self.alias[i].unwrap_or(i)
    }

    /// Pairs `(duplicate input, vertex)` created by [`DuplicatePolicy::Merge`].
    pub fn aliases(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alias
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|v| (i, v)))
    }

    /// Predicate counters accumulated during construction.
    pub fn predicate_stats(&self) -> PredicateStats {
        self.stats
    }

    fn is_finite_vertex(&self, v: usize) -> bool {
        v < self.points.len()
    }

    fn is_finite_face(&self, f: &Face) -> bool {
        f.v.iter().all(|&v| self.is_finite_vertex(v))
    }

    /// Every undirected edge between finite vertices, once.
    pub fn finite_edges(&self) -> Vec<DelaunayEdge<T>> {
        let edge = |a: usize, b: usize| DelaunayEdge {
            a,
            b,
            squared_length: self.points[a].dist_sq(self.points[b]),
        };
        if self.dimension < 2 {
            return self
                .chain
                .windows(2)
                .map(|w| edge(w[0].min(w[1]), w[0].max(w[1])))
                .collect();
        }
        let mut out = Vec::with_capacity(3 * self.points.len());
        for f in &self.faces {
            for i in 0..3 {
                let (a, b) = (f.v[next(i)], f.v[prev(i)]);
                if a < b && self.is_finite_vertex(b) {
                    out.push(edge(a, b));
                }
            }
        }
        out
    }

    /// Finite triangles, counterclockwise.
    pub fn finite_faces(&self) -> Vec<[usize; 3]> {
        self.faces
            .iter()
            .filter(|f| self.is_finite_face(f))
            .map(|f| f.v)
            .collect()
    }

    /// Number of hull edges (zero below dimension two).
    pub fn hull_size(&self) -> usize {
        if self.dimension < 2 {
            return 0;
        }
        self.faces.len() - self.finite_faces().len()
    }

    /// Faces around `v` in counterclockwise order, as `(face, index of v)`.
    fn star(&self, v: usize) -> Vec<(usize, usize)> {
        let start = self.vertex_face[v];
        let mut out = Vec::new();
        let mut f = start;
        loop {
            let i = self.faces[f]
                .index_of(v)
                .expect("vertex_face points at a face containing the vertex");
            out.push((f, i));
            f = self.faces[f].n[next(i)];
            if f == start {
                break;
            }
        }
        out
    }

    /// Number of finite edges at vertex `v`.
    pub fn vertex_degree(&self, v: usize) -> Result<usize> {
        if v >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: v,
                len: self.points.len(),
            });
        }
        if self.alias[v].is_some() {
            return Err(Error::NotAVertex { index: v });
        }
        match self.dimension {
            0 => Ok(0),
            1 => {
                let pos = self.chain.iter().position(|&c| c == v).unwrap();
                Ok(usize::from(pos > 0) + usize::from(pos + 1 < self.chain.len()))
            }
            _ => Ok(self
                .star(v)
                .into_iter()
                .filter(|&(f, i)| self.is_finite_vertex(self.faces[f].v[next(i)]))
                .count()),
        }
    }

    /// Writes one `i j` line per finite edge.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> io::Result<()> {
        for e in self.finite_edges() {
            writeln!(w, "{} {}", e.a, e.b)?;
        }
        Ok(())
    }

    /// Checks adjacency, orientation, local Delaunay and Euler counts using
    /// exact predicates. Returns a description of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        self.check(true)
    }

    /// With `complete == false`, vertices not inserted yet are ignored.
    fn check(&self, complete: bool) -> std::result::Result<(), String> {
        let nv = self.num_vertices();
        if self.dimension < 2 {
            if self.chain.len() != nv {
                return Err(format!(
                    "chain holds {} of {} vertices",
                    self.chain.len(),
                    nv
                ));
            }
            return Ok(());
        }
        let exact = Kernel::new(ArithmeticMode::Exact);
        let inf = self.infinite_vertex();
        for (fi, f) in self.faces.iter().enumerate() {
            for i in 0..3 {
                let g = f.n[i];
                let gf = self
                    .faces
                    .get(g)
                    .ok_or(format!("face {fi}: dangling link"))?;
                let j = gf
                    .neighbour_index(fi)
                    .ok_or(format!("faces {fi} and {g} not mutually linked"))?;
                if gf.v[next(j)] != f.v[prev(i)] || gf.v[prev(j)] != f.v[next(i)] {
                    return Err(format!("faces {fi} and {g} disagree on their shared edge"));
                }
                if f.v[i] != inf && conflicts(self, &exact, gf, f.v[i]) {
                    return Err(format!("face {g} conflicts with vertex {}", f.v[i]));
                }
            }
            if self.is_finite_face(f) {
                let [a, b, c] = f.v.map(|v| self.points[v]);
                if exact.orient2d(a, b, c) != Sign::Positive {
                    return Err(format!("face {fi} is not counterclockwise"));
                }
            } else if f.v.iter().filter(|&&v| v == inf).count() != 1 {
                return Err(format!("face {fi} repeats the infinite vertex"));
            }
        }
        for (v, &f) in self.vertex_face.iter().enumerate() {
            let live = v == inf || (complete && self.alias[v].is_none());
            if (live || f != NIL) && (f == NIL || self.faces[f].index_of(v).is_none()) {
                return Err(format!("vertex {v} has no incident face"));
            }
        }
        let nv = if complete {
            nv
        } else {
            self.vertex_face[..inf]
                .iter()
                .filter(|&&f| f != NIL)
                .count()
        };
        let h = self.hull_size();
        if self.faces.len() != 2 * nv - 2 {
            return Err(format!("{} faces for {} vertices", self.faces.len(), nv));
        }
        let e = self.finite_edges().len();
        if e != 3 * nv - 3 - h {
            return Err(format!("{e} edges for {nv} vertices and hull size {h}"));
        }
        Ok(())
    }
}

/// Whether `p` lies strictly inside the circumdisk of face `f`. For an
/// infinite face the disk degenerates to the open half-plane beyond its
/// finite edge, plus the open edge itself.
fn conflicts<T: Scalar>(t: &Triangulation<T>, k: &Kernel<T>, f: &Face, p: usize) -> bool {
    let inf = t.infinite_vertex();
    let pp = t.points[p];
    match f.index_of(inf) {
        None => {
            let [a, b, c] = f.v.map(|v| t.points[v]);
            k.incircle_ccw(a, b, c, pp) == Sign::Positive
        }
        Some(i) => {
            let (u, w) = (t.points[f.v[next(i)]], t.points[f.v[prev(i)]]);
            match k.orient2d(u, w, pp) {
                Sign::Positive => true,
                Sign::Negative => false,
                Sign::Zero => strictly_between(u, pp, w),
            }
        }
    }
}

fn insertion_order<T: Scalar>(
    points: &[Point<T>],
    order: InsertionOrder,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.shuffle(rng);
    if order == InsertionOrder::Random {
        return idx;
    }
    let coords = |p: &Point<T>| (p.re.to_f64().unwrap_or(0.0), p.im.to_f64().unwrap_or(0.0));
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in points {
        let (x, y) = coords(p);
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let cell = |v: f64, lo: f64, hi: f64| {
        let span = hi - lo;
        if span > 0.0 {
            ((v - lo) / span * u32::MAX as f64) as u32
        } else {
            0
        }
    };
    let mut keyed: Vec<(std::cmp::Reverse<u32>, u64, usize)> = idx
        .into_iter()
        .map(|i| {
            let round = rng.random::<u32>().leading_zeros();
            let (x, y) = coords(&points[i]);
            let h = fast_hilbert::xy2h(cell(x, lo.0, hi.0), cell(y, lo.1, hi.1), 32);
            (std::cmp::Reverse(round), h, i)
        })
        .collect();
    // stable, so equal keys keep their shuffled order
    keyed.sort_by_key(|&(r, h, _)| (r, h));
    keyed.into_iter().map(|(_, _, i)| i).collect()
}

fn lex<T: Scalar>(a: Point<T>, b: Point<T>) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap()
        .then(a.im.partial_cmp(&b.im).unwrap())
}

/// For collinear points: `p` lies on the open segment `uw`.
fn strictly_between<T: Scalar>(u: Point<T>, p: Point<T>, w: Point<T>) -> bool {
    use std::cmp::Ordering::Less;
    (lex(u, p) == Less && lex(p, w) == Less) || (lex(w, p) == Less && lex(p, u) == Less)
}

impl<T: Scalar> Builder<'_, T> {
    fn run(&mut self, order: &[usize], deadline: &Deadline) -> Result<()> {
        let mut keys: HashMap<ExactKey, usize> = HashMap::new();
        let mut chain: Vec<usize> = Vec::new();
        let mut rest = order.len();
        for (pos, &p) in order.iter().enumerate() {
            if pos % 256 == 0 {
                deadline.check()?;
            }
            if let Some(&v) = keys.get(&self.t.points[p].exact_key()) {
                self.duplicate(p, v)?;
                continue;
            }
            let pt = self.t.points[p];
            if chain.len() >= 2 {
                let (a, b) = (self.t.points[chain[0]], self.t.points[chain[1]]);
                if self.kernel.orient2d(a, b, pt) != Sign::Zero {
                    self.fan(chain.clone(), p);
                    rest = pos + 1;
                    break;
                }
            }
            keys.insert(pt.exact_key(), p);
            chain.push(p);
        }
        if self.t.dimension < 2 {
            let pts = &self.t.points;
            chain.sort_by(|&a, &b| lex(pts[a], pts[b]));
            self.t.dimension = u8::from(chain.len() > 1);
            self.t.chain = chain;
            return Ok(());
        }
        let mut last = order[rest - 1];
        for (pos, &p) in order.iter().enumerate().skip(rest) {
            if pos % 256 == 0 {
                deadline.check()?;
            }
            last = self.insert(p, last)?;
            if self.opts.check_each_insertion {
                self.t.check(false).map_err(|msg| {
                    debug_assert!(false, "after inserting {p}: {msg}");
                    Error::InconsistentPredicates("invariant violated after insertion")
                })?;
            }
        }
        Ok(())
    }

    fn duplicate(&mut self, p: usize, v: usize) -> Result<()> {
        match self.opts.duplicates {
            DuplicatePolicy::Reject => Err(Error::DuplicatePoint {
                first: p.min(v),
                second: p.max(v),
            }),
            DuplicatePolicy::Merge => {
                self.t.alias[p] = Some(v);
                Ok(())
            }
        }
    }

    /// First two-dimensional configuration: collinear `chain` plus apex `p`.
    fn fan(&mut self, mut chain: Vec<usize>, p: usize) {
        let inf = self.t.infinite_vertex();
        let pts = &self.t.points;
        chain.sort_by(|&a, &b| lex(pts[a], pts[b]));
        let (c0, cm) = (pts[chain[0]], pts[*chain.last().unwrap()]);
        if self.kernel.orient2d(c0, cm, pts[p]) == Sign::Negative {
            chain.reverse();
        }
        let m = chain.len() - 1;
        let mut tris: Vec<[usize; 3]> = Vec::with_capacity(2 * m + 2);
        for w in chain.windows(2) {
            tris.push([w[0], w[1], p]);
        }
        for w in chain.windows(2) {
            tris.push([w[1], w[0], inf]);
        }
        tris.push([p, chain[m], inf]);
        tris.push([chain[0], p, inf]);

        let mut edges: HashMap<(usize, usize), usize> = HashMap::with_capacity(3 * tris.len());
        for (fi, v) in tris.iter().enumerate() {
            for i in 0..3 {
                edges.insert((v[next(i)], v[prev(i)]), fi);
            }
        }
        for (fi, v) in tris.iter().enumerate() {
            let mut n = [NIL; 3];
            for (i, slot) in n.iter_mut().enumerate() {
                *slot = edges[&(v[prev(i)], v[next(i)])];
            }
            self.t.faces.push(Face { v: *v, n });
            for &x in v {
                self.t.vertex_face[x] = fi;
            }
        }
        self.t.dimension = 2;
    }

    fn orient(&self, a: usize, b: usize, c: usize) -> Sign {
        let p = &self.t.points;
        self.kernel.orient2d(p[a], p[b], p[c])
    }

    fn locate(&mut self, p: usize, start: usize) -> Result<Location> {
        let inf = self.t.infinite_vertex();
        let mut f = self.t.vertex_face[start];
        if let Some(i) = self.t.faces[f].index_of(inf) {
            f = self.t.faces[f].n[i];
        }
        let mut came_from = NIL;
        let limit = 4 * self.t.faces.len() + 64;
        for _ in 0..limit {
            let face = self.t.faces[f];
            if let Some(i) = face.index_of(inf) {
                debug_assert_eq!(face.n[i], came_from);
                return Ok(Location::Outside(f));
            }
            let r = self.rng.random_range(0..3);
            let mut zeros = [false; 3];
            let mut moved = false;
            for k in 0..3 {
                let i = (r + k) % 3;
                if face.n[i] == came_from {
                    continue;
                }
                match self.orient(face.v[next(i)], face.v[prev(i)], p) {
                    Sign::Negative => {
                        came_from = f;
                        f = face.n[i];
                        moved = true;
                        break;
                    }
                    Sign::Zero => zeros[i] = true,
                    Sign::Positive => {}
                }
            }
            if moved {
                continue;
            }
            return Ok(match zeros.iter().filter(|&&z| z).count() {
                0 => Location::Face(f),
                1 => Location::Edge(f, zeros.iter().position(|&z| z).unwrap()),
                2 => Location::Vertex(face.v[zeros.iter().position(|&z| !z).unwrap()]),
                _ => return Err(Error::InconsistentPredicates("degenerate face")),
            });
        }
        Err(Error::InconsistentPredicates(
            "point location did not terminate",
        ))
    }

    /// Inserts `p`; returns the vertex to start the next walk from.
    fn insert(&mut self, p: usize, last: usize) -> Result<usize> {
        match self.locate(p, last)? {
            Location::Vertex(v) => {
                self.duplicate(p, v)?;
                let star: Vec<usize> = self.t.star(v).into_iter().map(|(f, _)| f).collect();
                self.stack.extend(star);
                self.restore(v);
                Ok(v)
            }
            Location::Face(f) | Location::Outside(f) => {
                self.split_face(f, p);
                self.restore(p);
                Ok(p)
            }
            Location::Edge(f, i) => {
                self.split_edge(f, i, p);
                self.restore(p);
                Ok(p)
            }
        }
    }

    fn relink(&mut self, f: usize, old: usize, new: usize) {
        let face = &mut self.t.faces[f];
        let i = face.neighbour_index(old).expect("neighbour link");
        face.n[i] = new;
    }

    fn split_face(&mut self, f: usize, p: usize) {
        let Face {
            v: [a, b, c],
            n: [na, nb, nc],
        } = self.t.faces[f];
        let g = self.t.faces.len();
        let h = g + 1;
        self.t.faces[f] = Face {
            v: [a, b, p],
            n: [g, h, nc],
        };
        self.t.faces.push(Face {
            v: [b, c, p],
            n: [h, f, na],
        });
        self.t.faces.push(Face {
            v: [c, a, p],
            n: [f, g, nb],
        });
        self.relink(na, f, g);
        self.relink(nb, f, h);
        let vf = &mut self.t.vertex_face;
        vf[a] = f;
        vf[b] = f;
        vf[p] = f;
        vf[c] = g;
        self.stack.extend([f, g, h]);
    }

    fn split_edge(&mut self, f: usize, i: usize, p: usize) {
        let face = self.t.faces[f];
        let (c, a, b) = (face.v[i], face.v[next(i)], face.v[prev(i)]);
        let (n_fa, n_fb) = (face.n[next(i)], face.n[prev(i)]);
        let g = face.n[i];
        let gface = self.t.faces[g];
        let j = gface.neighbour_index(f).expect("neighbour link");
        let d = gface.v[j];
        let (n_gb, n_ga) = (gface.n[next(j)], gface.n[prev(j)]);
        let f2 = self.t.faces.len();
        let g2 = f2 + 1;
        self.t.faces[f] = Face {
            v: [c, a, p],
            n: [g2, f2, n_fb],
        };
        self.t.faces[g] = Face {
            v: [d, b, p],
            n: [f2, g2, n_ga],
        };
        self.t.faces.push(Face {
            v: [c, p, b],
            n: [g, n_fa, f],
        });
        self.t.faces.push(Face {
            v: [d, p, a],
            n: [f, n_gb, g],
        });
        self.relink(n_fa, f, f2);
        self.relink(n_gb, g, g2);
        let vf = &mut self.t.vertex_face;
        vf[c] = f;
        vf[a] = f;
        vf[p] = f;
        vf[b] = f2;
        vf[d] = g;
        self.stack.extend([f, f2, g, g2]);
    }

    /// Flips the edge opposite `v[i]` of face `f`.
    fn flip(&mut self, f: usize, i: usize) {
        let face = self.t.faces[f];
        let (p, x, y) = (face.v[i], face.v[next(i)], face.v[prev(i)]);
        let (f_x, f_y) = (face.n[next(i)], face.n[prev(i)]);
        let n = face.n[i];
        let nface = self.t.faces[n];
        let j = nface.neighbour_index(f).expect("neighbour link");
        let q = nface.v[j];
        let (n_y, n_x) = (nface.n[next(j)], nface.n[prev(j)]);
        self.t.faces[f] = Face {
            v: [p, x, q],
            n: [n_y, n, f_y],
        };
        self.t.faces[n] = Face {
            v: [q, y, p],
            n: [f_x, f, n_x],
        };
        self.relink(n_y, n, f);
        self.relink(f_x, f, n);
        let vf = &mut self.t.vertex_face;
        vf[p] = f;
        vf[x] = f;
        vf[q] = f;
        vf[y] = n;
    }

    /// Lawson flips around vertex `p`, starting from the faces on the stack.
    fn restore(&mut self, p: usize) {
        while let Some(f) = self.stack.pop() {
            let Some(i) = self.t.faces[f].index_of(p) else {
                continue;
            };
            let n = self.t.faces[f].n[i];
            if conflicts(&self.t, &self.kernel, &self.t.faces[n], p) {
                let nn = self.t.faces[n];
                self.flip(f, i);
                debug_assert!(nn.index_of(p).is_none());
                self.stack.push(f);
                self.stack.push(n);
            }
        }
    }
}
