//! Layered oriented tangles with mixed orientations, evaluated to sparse
//! morphisms between tensor products of `V` (up) and `V*` (down).

use std::fmt;

use num_traits::{One, Zero};

use crate::engine::{LocalOp, StateVec};
use crate::error::{Error, Result};
use crate::matrix::{solve, SparseMatrix, Solution};
use crate::repdata::{basis, trace_first, trace_last, RepData, DIM};
use crate::ring::{ext_to_pq, BiLaurent, ExtScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orient {
    /// Colored by `V`.
    Up,
    /// Colored by `V*`.
    Down,
}

impl Orient {
    pub fn flip(self) -> Self {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// A word in up/down strands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrientObject(pub Vec<Orient>);

impl OrientObject {
    pub fn parse(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|s| match s {
                "u" | "up" => Ok(Orient::Up),
                "d" | "down" => Ok(Orient::Down),
                _ => Err(Error::Parse(format!("bad orientation {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(OrientObject)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        DIM.pow(self.0.len() as u32)
    }

    pub fn concat(&self, other: &OrientObject) -> OrientObject {
        OrientObject(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for OrientObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|o| if *o == Orient::Up { "u" } else { "d" }).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Elementary slices. Crossings are named geometrically: in a positive
/// crossing the strand entering at the bottom left passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    PosCrossing,
    NegCrossing,
    /// Cap joining `(up, down)`.
    CapLr,
    /// Cap joining `(down, up)`.
    CapRl,
    /// Cup creating `(down, up)`.
    CupLr,
    /// Cup creating `(up, down)`.
    CupRl,
    Id,
}

impl Generator {
    fn name(self) -> &'static str {
        match self {
            Generator::PosCrossing => "pos_crossing",
            Generator::NegCrossing => "neg_crossing",
            Generator::CapLr => "cap_lr",
            Generator::CapRl => "cap_rl",
            Generator::CupLr => "cup_lr",
            Generator::CupRl => "cup_rl",
            Generator::Id => "id",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        [
            Generator::PosCrossing,
            Generator::NegCrossing,
            Generator::CapLr,
            Generator::CapRl,
            Generator::CupLr,
            Generator::CupRl,
            Generator::Id,
        ]
        .into_iter()
        .find(|g| g.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// One slice: a generator acting at strand `pos` (1-based). Crossings and
/// caps use strands `pos, pos+1`; a cup inserts its two new strands at
/// positions `pos, pos+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub pos: usize,
    pub gen: Generator,
}

/// A tangle as a bottom-to-top sequence of slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayeredTangle {
    pub bottom: OrientObject,
    pub slices: Vec<Slice>,
}

impl LayeredTangle {
    pub fn new(bottom: OrientObject, slices: Vec<Slice>) -> Result<Self> {
        let t = LayeredTangle { bottom, slices };
        t.top()?;
        Ok(t)
    }

    pub fn identity(obj: OrientObject) -> Self {
        LayeredTangle { bottom: obj, slices: Vec::new() }
    }

    /// Parse `bottom: u d ...` followed by `pos <index> <generator>` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut bottom = None;
        let mut slices = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("bottom:") {
                bottom = Some(OrientObject::parse(rest)?);
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["pos", idx, gen] => {
                    let pos = idx.parse().map_err(|_| Error::Parse(format!("bad position {idx:?}")))?;
                    slices.push(Slice { pos, gen: Generator::parse(gen)? });
                }
                _ => return Err(Error::Parse(format!("bad tangle line {line:?}"))),
            }
        }
        let bottom = bottom.ok_or_else(|| Error::Parse("missing `bottom:` line".into()))?;
        Self::new(bottom, slices)
    }

    /// Object after each slice, checking well-formedness.
    pub fn objects(&self) -> Result<Vec<OrientObject>> {
        let mut cur = self.bottom.0.clone();
        let mut out = vec![OrientObject(cur.clone())];
        for (k, s) in self.slices.iter().enumerate() {
            let bad = |reason: String| Error::IllFormedTangle { slice: k, reason };
            let i = s.pos.checked_sub(1).ok_or_else(|| bad("positions are 1-based".into()))?;
            match s.gen {
                Generator::Id => {}
                Generator::PosCrossing | Generator::NegCrossing => {
                    if i + 1 >= cur.len() {
                        return Err(bad(format!("no strands {} and {} to cross", s.pos, s.pos + 1)));
                    }
                    cur.swap(i, i + 1);
                }
                Generator::CapLr | Generator::CapRl => {
                    let want = if s.gen == Generator::CapLr {
                        [Orient::Up, Orient::Down]
                    } else {
                        [Orient::Down, Orient::Up]
                    };
                    if i + 1 >= cur.len() || cur[i..i + 2] != want {
                        return Err(bad(format!("{} needs strands {:?}", s.gen.name(), want)));
                    }
                    cur.drain(i..i + 2);
                }
                Generator::CupLr | Generator::CupRl => {
                    if i > cur.len() {
                        return Err(bad(format!("cup position {} beyond {} strands", s.pos, cur.len())));
                    }
                    let new = if s.gen == Generator::CupLr {
                        [Orient::Down, Orient::Up]
                    } else {
                        [Orient::Up, Orient::Down]
                    };
                    cur.splice(i..i, new);
                }
            }
            out.push(OrientObject(cur.clone()));
        }
        Ok(out)
    }

    pub fn top(&self) -> Result<OrientObject> {
        Ok(self.objects()?.pop().expect("at least the bottom object"))
    }

    /// `self` followed by `upper`.
    pub fn stack(&self, upper: &LayeredTangle) -> Result<LayeredTangle> {
        if self.top()? != upper.bottom {
            return Err(Error::OrientationMismatch(format!("cannot stack {} onto {}", upper.bottom, self.top()?)));
        }
        let mut slices = self.slices.clone();
        slices.extend(upper.slices.iter().copied());
        Ok(LayeredTangle { bottom: self.bottom.clone(), slices })
    }

    /// `self` placed to the left of `right`.
    pub fn beside(&self, right: &LayeredTangle) -> Result<LayeredTangle> {
        let left_top = self.top()?.len();
        let mut slices = self.slices.clone();
        slices.extend(right.slices.iter().map(|s| Slice { pos: s.pos + left_top, gen: s.gen }));
        Ok(LayeredTangle { bottom: self.bottom.concat(&right.bottom), slices })
    }
}

impl fmt::Display for LayeredTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bottom: {}", self.bottom)?;
        for s in &self.slices {
            writeln!(f, "pos {} {}", s.pos, s.gen.name())?;
        }
        Ok(())
    }
}

/// A linear map between the spaces of two orientation words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMorphism {
    pub domain: OrientObject,
    pub codomain: OrientObject,
    pub matrix: SparseMatrix,
}

impl SparseMorphism {
    pub fn new(domain: OrientObject, codomain: OrientObject, matrix: SparseMatrix) -> Self {
        assert_eq!(matrix.ncols(), domain.dim());
        assert_eq!(matrix.nrows(), codomain.dim());
        SparseMorphism { domain, codomain, matrix }
    }

    pub fn identity(obj: OrientObject) -> Self {
        let n = obj.dim();
        SparseMorphism::new(obj.clone(), obj, SparseMatrix::identity(n))
    }

    /// `self` followed by `after`.
    pub fn then(&self, after: &SparseMorphism) -> Result<SparseMorphism> {
        if self.codomain != after.domain {
            return Err(Error::OrientationMismatch(format!("{} vs {}", self.codomain, after.domain)));
        }
        Ok(SparseMorphism::new(self.domain.clone(), after.codomain.clone(), after.matrix.compose(&self.matrix)))
    }

    pub fn tensor(&self, other: &SparseMorphism) -> SparseMorphism {
        SparseMorphism::new(
            self.domain.concat(&other.domain),
            self.codomain.concat(&other.codomain),
            self.matrix.kron(&other.matrix),
        )
    }

    pub fn scale(&self, s: &ExtScalar) -> SparseMorphism {
        SparseMorphism { matrix: self.matrix.scale(s), ..self.clone() }
    }

    pub fn add(&self, other: &SparseMorphism) -> SparseMorphism {
        assert_eq!((&self.domain, &self.codomain), (&other.domain, &other.codomain));
        SparseMorphism { matrix: self.matrix.add(&other.matrix), ..self.clone() }
    }
}

/// Cups, caps and the crossings for all four orientation pairs, derived
/// from the braiding on `V⊗V` and the pivot.
#[derive(Clone, Debug)]
pub struct Kit {
    /// `crossing[sign][a][b]` for strands `(a, b)` at the bottom, with
    /// `sign` 0 for positive and 1 for negative and 0 = up, 1 = down.
    crossing: [[[SparseMatrix; 2]; 2]; 2],
    /// `1 -> V⊗V*`.
    pub coev: SparseMatrix,
    /// `1 -> V*⊗V`, with the inverse pivot.
    pub coev_tilde: SparseMatrix,
    /// `V*⊗V -> 1`.
    pub ev: SparseMatrix,
    /// `V⊗V* -> 1`, with the pivot.
    pub ev_tilde: SparseMatrix,
}

fn oidx(o: Orient) -> usize {
    match o {
        Orient::Up => 0,
        Orient::Down => 1,
    }
}

impl Kit {
    pub fn new(rep: &RepData) -> Kit {
        let n2 = DIM * DIM;
        let diag = |w: Option<&[ExtScalar; DIM]>| -> Vec<(usize, ExtScalar)> {
            (0..DIM).map(|k| (basis(k + 1, k + 1), w.map_or_else(ExtScalar::one, |w| w[k].clone()))).collect()
        };
        let coev = SparseMatrix::from_entries(n2, 1, diag(None).into_iter().map(|(r, v)| (r, 0, v)));
        let coev_tilde = SparseMatrix::from_entries(n2, 1, diag(Some(&rep.pivot_inverse)).into_iter().map(|(r, v)| (r, 0, v)));
        let ev = SparseMatrix::from_entries(1, n2, diag(None).into_iter().map(|(c, v)| (0, c, v)));
        let ev_tilde = SparseMatrix::from_entries(1, n2, diag(Some(&rep.pivot)).into_iter().map(|(c, v)| (0, c, v)));
        let id = SparseMatrix::identity(DIM);
        let id2 = SparseMatrix::identity(n2);

        let bend_up_down = |x: &SparseMatrix| {
            // V⊗V* -> V*⊗V*⊗... : cup on the left, X on the middle pair, cap on the right.
            let lower = coev_tilde.kron(&id2);
            let middle = id.kron(x).kron(&id);
            let upper = id2.kron(&ev_tilde);
            upper.compose(&middle).compose(&lower)
        };
        let bend_down_up = |x: &SparseMatrix| {
            let lower = id2.kron(&coev);
            let middle = id.kron(x).kron(&id);
            let upper = ev.kron(&id2);
            upper.compose(&middle).compose(&lower)
        };
        let uu = [rep.braiding.clone(), rep.braiding_inverse.clone()];
        let ud = [bend_up_down(&uu[1]), bend_up_down(&uu[0])];
        let du = [bend_down_up(&uu[1]), bend_down_up(&uu[0])];
        let dd = [bend_up_down(&ud[1]), bend_up_down(&ud[0])];
        let crossing = [0, 1].map(|s| [[uu[s].clone(), ud[s].clone()], [du[s].clone(), dd[s].clone()]]);
        Kit { crossing, coev, coev_tilde, ev, ev_tilde }
    }

    /// Crossing with bottom strands `(a, b)`.
    pub fn crossing(&self, positive: bool, a: Orient, b: Orient) -> &SparseMatrix {
        &self.crossing[usize::from(!positive)][oidx(a)][oidx(b)]
    }

    fn local_op(&self, gen: Generator, pair: Option<(Orient, Orient)>) -> Option<LocalOp> {
        Some(match gen {
            Generator::Id => return None,
            Generator::PosCrossing | Generator::NegCrossing => {
                let (a, b) = pair.expect("crossing has two strands");
                LocalOp::from_matrix(self.crossing(gen == Generator::PosCrossing, a, b), 2, 2)
            }
            Generator::CapLr => LocalOp::from_matrix(&self.ev_tilde, 2, 0),
            Generator::CapRl => LocalOp::from_matrix(&self.ev, 2, 0),
            Generator::CupLr => LocalOp::from_matrix(&self.coev_tilde, 0, 2),
            Generator::CupRl => LocalOp::from_matrix(&self.coev, 0, 2),
        })
    }
}

/// Evaluate a tangle by propagating every basis vector of the bottom
/// object through the slices.
pub fn evaluate(t: &LayeredTangle, rep: &RepData) -> Result<SparseMorphism> {
    evaluate_with(t, &Kit::new(rep))
}

pub fn evaluate_with(t: &LayeredTangle, kit: &Kit) -> Result<SparseMorphism> {
    let objects = t.objects()?;
    let ops: Vec<Option<(LocalOp, usize, usize)>> = t
        .slices
        .iter()
        .zip(&objects)
        .map(|(s, obj)| {
            let i = s.pos - 1;
            let pair = (i + 1 < obj.len()).then(|| (obj.0[i], obj.0[i + 1]));
            kit.local_op(s.gen, pair).map(|op| (op, i, obj.len()))
        })
        .collect();
    let domain = t.bottom.clone();
    let codomain = objects.last().expect("bottom object").clone();
    let cols = (0..domain.dim())
        .map(|c| {
            let mut v = StateVec::new();
            v.insert(c, ExtScalar::one());
            for (op, pos, len) in ops.iter().flatten() {
                v = op.apply(&v, *len, *pos);
                if v.is_empty() {
                    break;
                }
            }
            v
        })
        .collect();
    let dim = codomain.dim();
    Ok(SparseMorphism::new(domain, codomain, SparseMatrix::from_columns(dim, cols)))
}

/// Close the rightmost strand, which must be oriented up, with the pivot.
pub fn partial_trace_right(m: &SparseMorphism, rep: &RepData) -> Result<SparseMorphism> {
    if m.domain != m.codomain {
        return Err(Error::OrientationMismatch("partial trace needs an endomorphism".into()));
    }
    match m.domain.0.last() {
        Some(Orient::Up) => {}
        _ => return Err(Error::OrientationMismatch("rightmost strand must be oriented up".into())),
    }
    let obj = OrientObject(m.domain.0[..m.domain.len() - 1].to_vec());
    Ok(SparseMorphism::new(obj.clone(), obj, trace_last(&m.matrix, &rep.pivot)))
}

/// Close the leftmost strand around the left side: with the inverse pivot
/// for an up strand and with the pivot for a down strand.
pub fn partial_trace_left(m: &SparseMorphism, rep: &RepData) -> Result<SparseMorphism> {
    if m.domain != m.codomain || m.domain.is_empty() {
        return Err(Error::OrientationMismatch("partial trace needs a nonempty endomorphism".into()));
    }
    let weights = match m.domain.0[0] {
        Orient::Up => &rep.pivot_inverse,
        Orient::Down => &rep.pivot,
    };
    let obj = OrientObject(m.domain.0[1..].to_vec());
    Ok(SparseMorphism::new(obj.clone(), obj, trace_first(&m.matrix, weights)))
}

fn slice(pos: usize, gen: Generator) -> Slice {
    Slice { pos, gen }
}

/// The object `V*⊗V`.
pub fn down_up() -> OrientObject {
    OrientObject(vec![Orient::Down, Orient::Up])
}

/// Tangle of the clasp: a cap-shaped arc from the bottom endpoints hooked
/// once through a cup-shaped arc from the top endpoints, both crossings
/// positive.
pub fn clasp_tangle() -> LayeredTangle {
    use Generator::*;
    LayeredTangle {
        bottom: down_up(),
        slices: vec![slice(2, CupLr), slice(1, PosCrossing), slice(3, PosCrossing), slice(2, CapRl)],
    }
}

/// Cap over cup on `V*⊗V`.
pub fn capcup_tangle() -> LayeredTangle {
    LayeredTangle { bottom: down_up(), slices: vec![slice(1, Generator::CapRl), slice(1, Generator::CupLr)] }
}

/// `n` full twists of two antiparallel strands, every crossing positive
/// for the orientation (a geometric negative crossing between strands of
/// opposite direction). Negative `n` twists the other way.
pub fn antiparallel_twists_tangle(n: i32) -> LayeredTangle {
    let gen = if n >= 0 { Generator::NegCrossing } else { Generator::PosCrossing };
    LayeredTangle { bottom: down_up(), slices: vec![slice(1, gen); 2 * n.unsigned_abs() as usize] }
}

pub fn clasp(rep: &RepData) -> SparseMorphism {
    evaluate(&clasp_tangle(), rep).expect("well-formed")
}

pub fn capcup(rep: &RepData) -> SparseMorphism {
    evaluate(&capcup_tangle(), rep).expect("well-formed")
}

pub fn antiparallel_twists(n: i32, rep: &RepData) -> SparseMorphism {
    evaluate(&antiparallel_twists_tangle(n), rep).expect("well-formed")
}

/// Horizontal composition on `V*⊗V`: `a` and `b` side by side with the
/// right strand of `a` joined to the left strand of `b` above and below.
/// This composes the rotated pictures, so the clasp squared in this sense
/// is the double clasp.
pub fn horizontal(a: &SparseMorphism, b: &SparseMorphism, rep: &RepData) -> Result<SparseMorphism> {
    let kit = Kit::new(rep);
    let du = down_up();
    if a.domain != du || a.codomain != du || b.domain != du || b.codomain != du {
        return Err(Error::OrientationMismatch("horizontal product is defined on V*⊗V".into()));
    }
    let id = SparseMatrix::identity(DIM);
    let lower = id.kron(&kit.coev).kron(&id);
    let upper = id.kron(&kit.ev_tilde).kron(&id);
    let m = upper.compose(&a.matrix.kron(&b.matrix)).compose(&lower);
    Ok(SparseMorphism::new(du.clone(), du, m))
}

/// Coefficients `(a, b, c)` with `m = a·clasp + b·capcup + c·id`.
pub fn decompose_in_basis(m: &SparseMorphism, rep: &RepData) -> Result<(BiLaurent, BiLaurent, BiLaurent)> {
    let du = down_up();
    if m.domain != du || m.codomain != du {
        return Err(Error::OrientationMismatch("decomposition is defined on V*⊗V".into()));
    }
    let basis_vecs = [clasp(rep).matrix.flatten(), capcup(rep).matrix.flatten(), SparseMatrix::identity(16).flatten()];
    let target = m.matrix.flatten();
    let a: Vec<Vec<ExtScalar>> = (0..target.len()).map(|i| basis_vecs.iter().map(|v| v[i].clone()).collect()).collect();
    let b: Vec<Vec<ExtScalar>> = target.into_iter().map(|x| vec![x]).collect();
    match solve(&a, &b) {
        Solution::Unique(x, 3) => Ok((ext_to_pq(&x[0][0])?, ext_to_pq(&x[1][0])?, ext_to_pq(&x[2][0])?)),
        Solution::Unique(..) => Err(Error::NotInSpan),
        Solution::Inconsistent => Err(Error::NotInSpan),
        Solution::NotIntegral => Err(Error::InexactDivision("basis coefficients are not Laurent polynomials".into())),
    }
}

/// `s·m` for a scalar given in `(p, q)`.
pub fn scale_pq(m: &SparseMorphism, s: &BiLaurent) -> Result<SparseMorphism> {
    Ok(m.scale(&crate::ring::pq_to_ext(s)?))
}

/// The scalar of a closed `(1,1)` endomorphism of `V`, converted to `(p, q)`.
pub fn scalar_of(m: &SparseMorphism) -> Result<BiLaurent> {
    let s = m.matrix.as_scalar().ok_or_else(|| Error::NonScalarResult("not a multiple of the identity".into()))?;
    if s.is_zero() {
        return Ok(BiLaurent::zero());
    }
    ext_to_pq(&s)
}

/// Close every strand of an endomorphism tangle except the first, by
/// nested arcs around the right side, giving a `(1,1)`-tangle.
pub fn close_right(t: &LayeredTangle) -> Result<LayeredTangle> {
    let w = t.bottom.clone();
    if t.top()? != w || w.is_empty() {
        return Err(Error::OrientationMismatch("closure needs a nonempty endomorphism tangle".into()));
    }
    let m = w.len();
    let mut slices = Vec::with_capacity(t.slices.len() + 2 * (m - 1));
    for k in 1..m {
        let gen = if w.0[k] == Orient::Up { Generator::CupRl } else { Generator::CupLr };
        slices.push(slice(k + 1, gen));
    }
    slices.extend(t.slices.iter().copied());
    for k in (1..m).rev() {
        let gen = if w.0[k] == Orient::Up { Generator::CapLr } else { Generator::CapRl };
        slices.push(slice(k + 1, gen));
    }
    LayeredTangle::new(OrientObject(vec![w.0[0]]), slices)
}

/// `LG` of the closure of an endomorphism tangle, first strand open.
pub fn lg_of_closure(t: &LayeredTangle, rep: &RepData) -> Result<BiLaurent> {
    scalar_of(&evaluate(&close_right(t)?, rep)?)
}

/// The two components of a closed 2-braid `σ1^2` (a Hopf link of cores),
/// each replaced by a pair of antiparallel blackboard-parallel strands.
/// Its closure is the boundary of two Hopf-linked untwisted annuli.
pub fn hopf_linked_annuli_core() -> LayeredTangle {
    let cabled_crossing = [2, 1, 3, 2];
    let slices = cabled_crossing.iter().chain(cabled_crossing.iter()).map(|&p| slice(p, Generator::PosCrossing)).collect();
    LayeredTangle { bottom: OrientObject(vec![Orient::Up, Orient::Down, Orient::Up, Orient::Down]), slices }
}

/// The `(1,1)`-tangle presentation of the boundary of two Hopf-linked
/// untwisted annuli.
pub fn hopf_linked_annuli() -> LayeredTangle {
    close_right(&hopf_linked_annuli_core()).expect("endomorphism tangle")
}

/// `antiparallel_twists(n) = B_n·clasp + C_n·capcup + D_n·id` as operators.
pub fn skein_identity_holds(n: i32, rep: &RepData) -> Result<bool> {
    let s = crate::skein::skein_coeffs(n)?;
    let rhs = scale_pq(&clasp(rep), &crate::ring::lift_q(&s.b))?
        .add(&scale_pq(&capcup(rep), &s.c)?)
        .add(&scale_pq(&SparseMorphism::identity(down_up()), &s.d)?);
    Ok(antiparallel_twists(n, rep) == rhs)
}

/// `g·id = q·capcup − (q + q⁻¹)·clasp + q⁻¹·clasp²`, with `clasp²` the
/// horizontal double clasp.
pub fn double_clasp_identity_holds(rep: &RepData) -> Result<bool> {
    let q = |e: i32| BiLaurent::monomial((0, e), One::one());
    let cl = clasp(rep);
    let cl2 = horizontal(&cl, &cl, rep)?;
    let rhs = scale_pq(&capcup(rep), &q(1))?
        .add(&scale_pq(&cl, &-(&q(1) + &q(-1)))?)
        .add(&scale_pq(&cl2, &q(-1))?);
    let lhs = scale_pq(&SparseMorphism::identity(down_up()), &crate::skein::g_poly()?)?;
    Ok(lhs == rhs)
}
