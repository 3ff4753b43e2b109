//! Noncrossing permutations on discs and annuli.
//!
//! The base permutation `ρ` (one cycle for a disc, two for an annulus) plays
//! the role of the boundary; `Kr_ρ(π) = π⁻¹ρ` is the complement, and the
//! Euler characteristic `χ_ρ(π) = #(ρ) + #(π) + #(Kr_ρ(π)) − n` detects
//! planarity: `π` is noncrossing on `ρ` exactly when `χ_ρ(π)` equals twice
//! the number of connected components `#(Π(π) ∨ Π(ρ))`. The annulus
//! `τ_{p,q} = (1,…,p)(p+1,…,p+q)` gets a second, independent
//! characterization by forbidden finite patterns, plus the bridge and
//! outside-face machinery used to build annular elements from disc ones.

use itertools::Itertools;

use crate::partition::SetPartition;
use crate::perm::Perm;
use crate::{max_enumeration_n, Error, Result};

/// The two-circle boundary shape: `τ_{p,q} = (1,…,p)(p+1,…,p+q)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AnnulusShape {
    p: usize,
    q: usize,
}

impl AnnulusShape {
    /// New shape; both circle sizes must be ≥ 1.
    pub fn new(p: usize, q: usize) -> AnnulusShape {
        assert!(p >= 1 && q >= 1, "circle sizes must be positive");
        AnnulusShape { p, q }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Total number of boundary points `p + q`.
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// The base permutation `τ_{p,q}`.
    pub fn tau(&self) -> Perm {
        Perm::tau_pq(self.p, self.q)
    }

    /// The ground set `[p+q]`.
    pub fn ground(&self) -> Vec<i64> {
        (1..=self.n() as i64).collect()
    }

    /// Elements of the first circle `[p]`.
    pub fn first_circle(&self) -> Vec<i64> {
        (1..=self.p as i64).collect()
    }

    /// Elements of the second circle `[p+1, p+q]`.
    pub fn second_circle(&self) -> Vec<i64> {
        (self.p as i64 + 1..=self.n() as i64).collect()
    }

    /// True if `x` lies on the first circle.
    pub fn in_first(&self, x: i64) -> bool {
        x >= 1 && x <= self.p as i64
    }

    /// True if the cycle (or any element set) meets both circles.
    pub fn is_bridge_set(&self, cycle: &[i64]) -> bool {
        cycle.iter().any(|&x| self.in_first(x)) && cycle.iter().any(|&x| !self.in_first(x))
    }
}

/// Kreweras complement `Kr_ρ(π) = π⁻¹ρ` (apply `ρ` first).
pub fn kreweras(pi: &Perm, rho: &Perm) -> Perm {
    pi.inverse().compose(rho)
}

/// Inverse complement `Kr_ρ⁻¹(σ) = ρσ⁻¹`, so `Kr_ρ⁻¹(Kr_ρ(π)) = π`.
pub fn kreweras_inv(sigma: &Perm, rho: &Perm) -> Perm {
    rho.compose(&sigma.inverse())
}

/// Orbit partition `Π(π)`.
pub fn orbit_partition(pi: &Perm) -> SetPartition {
    SetPartition::from_blocks(&pi.orbit_blocks()).unwrap()
}

/// Number of blocks of `Π(π) ∨ Π(ρ)` — connected components of the pair.
pub fn join_count(pi: &Perm, rho: &Perm) -> usize {
    orbit_partition(pi).join(&orbit_partition(rho)).num_blocks()
}

/// Euler characteristic `χ_ρ(π) = #(ρ) + #(π) + #(π⁻¹ρ) − n`.
pub fn euler_char(pi: &Perm, rho: &Perm) -> i64 {
    assert_eq!(pi.ground(), rho.ground(), "euler_char requires equal grounds");
    let chi = rho.cycle_count() as i64 + pi.cycle_count() as i64
        + kreweras(pi, rho).cycle_count() as i64
        - pi.len() as i64;
    assert!(
        chi <= 2 * join_count(pi, rho) as i64,
        "Euler characteristic exceeded twice the component count"
    );
    chi
}

/// Noncrossing test by Euler characteristic: `χ_ρ(π) = 2#(Π(π) ∨ Π(ρ))`.
pub fn is_noncrossing_chi(pi: &Perm, rho: &Perm) -> bool {
    euler_char(pi, rho) == 2 * join_count(pi, rho) as i64
}

/// Noncrossing test by forbidden patterns: the one-cycle criterion scans
/// reversed triples and interleaved quadruples; the two-cycle criterion adds
/// the cross-circle patterns built on the spliced cycles `λ_{x,y}`.
/// Rejects bases with three or more cycles.
pub fn is_noncrossing_conditions(pi: &Perm, rho: &Perm) -> Result<bool> {
    assert_eq!(pi.ground(), rho.ground(), "equal grounds required");
    let circles = rho.cycles();
    match circles.len() {
        1 => Ok(!has_disc_crossing(pi, rho)),
        2 => Ok(!has_annular_crossing(pi, rho, &circles[0], &circles[1])),
        k => Err(Error::BadInput(format!(
            "pattern criterion needs a base with 1 or 2 cycles, got {k}"
        ))),
    }
}

/// One-cycle forbidden patterns: a triple met in reverse order, or two pairs
/// meeting in interleaved order.
fn has_disc_crossing(pi: &Perm, rho: &Perm) -> bool {
    let ground = pi.ground().to_vec();
    for s in ground.iter().copied().combinations(3) {
        let t3 = rho.induced(&s).unwrap();
        if pi.induced(&s).unwrap() == t3.inverse() {
            return true;
        }
    }
    for s in ground.iter().copied().combinations(4) {
        let t4 = rho.induced(&s).unwrap();
        if pi.induced(&s).unwrap() == t4.compose(&t4) {
            return true;
        }
    }
    false
}

/// Two-cycle forbidden patterns (nonstandard and crossing conditions).
fn has_annular_crossing(pi: &Perm, rho: &Perm, c1: &[i64], c2: &[i64]) -> bool {
    // Within one circle: reversed triple, interleaved quadruple.
    for circle in [c1, c2] {
        for s in circle.iter().copied().combinations(3) {
            let t3 = rho.induced(&s).unwrap();
            if pi.induced(&s).unwrap() == t3.inverse() {
                return true;
            }
        }
        for s in circle.iter().copied().combinations(4) {
            let t4 = rho.induced(&s).unwrap();
            if pi.induced(&s).unwrap() == t4.compose(&t4) {
                return true;
            }
        }
    }
    // Two points on each circle met in alternating order (nonstandard).
    for s1 in c1.iter().copied().combinations(2) {
        for s2 in c2.iter().copied().combinations(2) {
            let s: Vec<i64> = s1.iter().chain(s2.iter()).copied().collect();
            let ind = pi.induced(&s).unwrap();
            let cycles = ind.cycles();
            if cycles.len() != 1 || cycles[0].len() != 4 {
                continue;
            }
            let c = &cycles[0];
            let in_first = |x: i64| s1.contains(&x);
            if (0..4).all(|i| in_first(c[i]) != in_first(c[(i + 1) % 4])) {
                return true;
            }
        }
    }
    // Patterns on the spliced cycle λ_{x,y}, for x and y on different circles
    // joined by π: a reversed triple or an interleaved quadruple of the
    // remaining points.
    for &x in c1 {
        for &y in c2 {
            let lambda = spliced_cycle(rho, x, y);
            if lambda.len() < 3 {
                continue;
            }
            let lam = Perm::from_cycles(&lambda, &[lambda.clone()]).unwrap();
            for s in lambda.iter().copied().combinations(3) {
                let l3 = lam.induced(&s).unwrap();
                let mut full: Vec<i64> = s.clone();
                full.push(x);
                full.push(y);
                let target = Perm::from_cycles(
                    &full,
                    &[l3.inverse().cycle_of(s[0]), vec![x, y]],
                )
                .unwrap();
                if pi.induced(&full).unwrap() == target {
                    return true;
                }
            }
            if lambda.len() < 4 {
                continue;
            }
            for s in lambda.iter().copied().combinations(4) {
                let l4 = lam.induced(&s).unwrap();
                let c = l4.cycle_of(s[0]);
                let mut full: Vec<i64> = s.clone();
                full.push(x);
                full.push(y);
                let target = Perm::from_cycles(
                    &full,
                    &[vec![c[0], c[2]], vec![c[1], c[3]], vec![x, y]],
                )
                .unwrap();
                if pi.induced(&full).unwrap() == target {
                    return true;
                }
            }
        }
    }
    false
}

/// The spliced cycle `λ_{x,y} = (ρ(x), …, ρ⁻¹(x), ρ(y), …, ρ⁻¹(y))` for `x`
/// and `y` on different cycles of `ρ`, as an element list in cyclic order
/// (empty parts for fixed points of `ρ`).
pub fn spliced_cycle(rho: &Perm, x: i64, y: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for &start in &[x, y] {
        let mut z = rho.apply(start);
        while z != start {
            out.push(z);
            z = rho.apply(z);
        }
    }
    out
}

/// All permutations of a ground set, in lexicographic image order.
/// Guarded by the enumeration bound.
pub fn all_perms(ground: &[i64]) -> Result<Vec<Perm>> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    g.dedup();
    let n = g.len();
    if n > max_enumeration_n() {
        return Err(Error::BoundExceeded(format!(
            "enumeration over S({n}) exceeds the configured bound {}",
            max_enumeration_n()
        )));
    }
    Ok((0..n)
        .permutations(n)
        .map(|images| {
            let pairs: Vec<(i64, i64)> = (0..n).map(|i| (g[i], g[images[i]])).collect();
            Perm::from_pairs(&pairs).unwrap()
        })
        .collect())
}

/// All permutations noncrossing on `rho` (any number of cycles), by
/// exhaustive filtering with the χ criterion.
pub fn enumerate_nc(rho: &Perm) -> Result<Vec<Perm>> {
    Ok(all_perms(rho.ground())?
        .into_iter()
        .filter(|pi| is_noncrossing_chi(pi, rho))
        .collect())
}

/// `S_nc(n)`: permutations noncrossing on the one-cycle base `τ_n`.
pub fn enumerate_nc_disc(n: usize) -> Result<Vec<Perm>> {
    enumerate_nc(&Perm::tau_n(n))
}

/// `S_nc(p,q)`: all permutations noncrossing on `τ_{p,q}`.
pub fn enumerate_nc_pq(shape: AnnulusShape) -> Result<Vec<Perm>> {
    enumerate_nc(&shape.tau())
}

/// `S_disc-nc(p,q)`: noncrossing with no bridge (each cycle within one
/// circle); isomorphic to `S_nc(p) × S_nc(q)`.
pub fn enumerate_disc_nc(shape: AnnulusShape) -> Result<Vec<Perm>> {
    Ok(enumerate_nc_pq(shape)?
        .into_iter()
        .filter(|pi| bridge_cycles(pi, shape).is_empty())
        .collect())
}

/// `S_ann-nc(p,q)`: noncrossing with at least one bridge.
pub fn enumerate_ann_nc(shape: AnnulusShape) -> Result<Vec<Perm>> {
    Ok(enumerate_nc_pq(shape)?
        .into_iter()
        .filter(|pi| !bridge_cycles(pi, shape).is_empty())
        .collect())
}

/// Cycles of `π` meeting both circles (no noncrossing check).
fn bridge_cycles(pi: &Perm, shape: AnnulusShape) -> Vec<Vec<i64>> {
    pi.cycles()
        .into_iter()
        .filter(|c| shape.is_bridge_set(c))
        .collect()
}

/// Bridges of an annular noncrossing `π`: its cycles meeting both circles.
/// Errors when `π` is crossing; a disc-noncrossing `π` yields an empty list.
pub fn bridges(pi: &Perm, shape: AnnulusShape) -> Result<Vec<Vec<i64>>> {
    if !is_noncrossing_chi(pi, &shape.tau()) {
        return Err(Error::NotNoncrossing);
    }
    Ok(bridge_cycles(pi, shape))
}

/// The restriction `π|_ρ`: the product of the permutations induced on each
/// cycle of `ρ`. For `ρ = τ_{p,q}` this cuts every bridge of `π` into its
/// two disc parts.
pub fn restrict_to_cycles(pi: &Perm, rho: &Perm) -> Perm {
    let mut pairs: Vec<(i64, i64)> = Vec::with_capacity(pi.len());
    for cycle in rho.cycles() {
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        let ind = pi.induced(&sorted).unwrap();
        for &x in ind.ground() {
            pairs.push((x, ind.apply(x)));
        }
    }
    Perm::from_pairs(&pairs).unwrap()
}

/// Outside faces of `π` relative to a disc-noncrossing `ρ ⪰ π|_τ`: the two
/// cycles of `ρ(π|_τ)⁻¹` (one per circle) whose elements are exactly the
/// elements of the bridges of `ρπ⁻¹`. Errors when `π` is crossing or has no
/// bridge.
pub fn outside_faces_in(pi: &Perm, rho: &Perm, shape: AnnulusShape) -> Result<(Vec<i64>, Vec<i64>)> {
    if !is_noncrossing_chi(pi, &shape.tau()) {
        return Err(Error::NotNoncrossing);
    }
    let kr_inv_pi = kreweras_inv(pi, rho); // ρπ⁻¹, complement of π in ρ
    let bridge_elems: Vec<i64> = bridge_cycles(&kr_inv_pi, shape)
        .into_iter()
        .flatten()
        .sorted()
        .collect();
    if bridge_elems.is_empty() {
        return Err(Error::BadInput(
            "no bridges: outside faces are undefined".into(),
        ));
    }
    let pi0 = restrict_to_cycles(pi, &shape.tau());
    let kr_inv_pi0 = kreweras_inv(&pi0, rho); // ρπ₀⁻¹
    let mut faces: Vec<Vec<i64>> = kr_inv_pi0
        .cycles()
        .into_iter()
        .filter(|c| c.iter().any(|x| bridge_elems.binary_search(x).is_ok()))
        .collect();
    if faces.len() != 2 {
        return Err(Error::BadInput(format!(
            "expected 2 outside faces, found {}",
            faces.len()
        )));
    }
    faces.sort_by_key(|c| !shape.in_first(c[0]));
    let covered: Vec<i64> = faces.iter().flatten().copied().sorted().collect();
    if covered != bridge_elems || !shape.in_first(faces[0][0]) || shape.in_first(faces[1][0]) {
        return Err(Error::BadInput(
            "outside faces do not cover the complement bridges".into(),
        ));
    }
    Ok((faces[0].clone(), faces[1].clone()))
}

/// Outside faces with `ρ = τ_{p,q}`: the two cycles of `τπ₀⁻¹` covering the
/// bridges of `τπ⁻¹`.
pub fn outside_faces(pi: &Perm, shape: AnnulusShape) -> Result<(Vec<i64>, Vec<i64>)> {
    outside_faces_in(pi, &shape.tau(), shape)
}

/// Outside faces under the opposite complement convention: the two cycles of
/// `π₀⁻¹τ` covering the bridges of `π⁻¹τ`. Exposed separately so the two
/// conventions can never be confused.
pub fn outside_faces_kr(pi: &Perm, shape: AnnulusShape) -> Result<(Vec<i64>, Vec<i64>)> {
    if !is_noncrossing_chi(pi, &shape.tau()) {
        return Err(Error::NotNoncrossing);
    }
    let tau = shape.tau();
    let kr_pi = kreweras(pi, &tau); // π⁻¹τ
    let bridge_elems: Vec<i64> = bridge_cycles(&kr_pi, shape)
        .into_iter()
        .flatten()
        .sorted()
        .collect();
    if bridge_elems.is_empty() {
        return Err(Error::BadInput(
            "no bridges: outside faces are undefined".into(),
        ));
    }
    let pi0 = restrict_to_cycles(pi, &tau);
    let kr_pi0 = kreweras(&pi0, &tau);
    let mut faces: Vec<Vec<i64>> = kr_pi0
        .cycles()
        .into_iter()
        .filter(|c| c.iter().any(|x| bridge_elems.binary_search(x).is_ok()))
        .collect();
    if faces.len() != 2 {
        return Err(Error::BadInput(format!(
            "expected 2 outside faces, found {}",
            faces.len()
        )));
    }
    faces.sort_by_key(|c| !shape.in_first(c[0]));
    let covered: Vec<i64> = faces.iter().flatten().copied().sorted().collect();
    if covered != bridge_elems {
        return Err(Error::BadInput(
            "outside faces do not cover the complement bridges".into(),
        ));
    }
    Ok((faces[0].clone(), faces[1].clone()))
}

/// The opposite permutation: conjugation by the reversal of the second
/// circle (`p+1 ↔ p+q`, `p+2 ↔ p+q−1`, …), an involution on `S(p+q)`.
pub fn opposite(pi: &Perm, shape: AnnulusShape) -> Perm {
    let p = shape.p as i64;
    let n = shape.n() as i64;
    pi.relabel(|x| if x <= p { x } else { p + n + 1 - x }).unwrap()
}

/// The base permutation seen by opposites: `τ_op = (1,…,p)(p+q,…,p+1)`.
pub fn tau_opposite(shape: AnnulusShape) -> Perm {
    opposite(&shape.tau(), shape)
}

/// Where a noncrossing permutation sits in the singlets classification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SingletClass {
    /// Some cycle contains both `a` and `τ(a)` with `τ(a) ≠ a`.
    HasAdjacentPair,
    /// No adjacent pair, and at least two single-element cycles.
    HasTwoSinglets,
    /// Annular, no adjacent pair, no singleton: all cycles pair the two
    /// circles in reversed cyclic order (forces `p = q`).
    Spoke,
    /// None of the above.
    Other,
}

/// Classify a noncrossing permutation by its singlet structure. The base
/// `tau` may have one or two cycles; errors on crossing input.
pub fn singlet_classify(pi: &Perm, tau: &Perm) -> Result<SingletClass> {
    if !is_noncrossing_chi(pi, tau) {
        return Err(Error::NotNoncrossing);
    }
    let adjacent = pi
        .ground()
        .iter()
        .any(|&a| tau.apply(a) != a && pi.cycle_of(a).contains(&tau.apply(a)));
    if adjacent {
        return Ok(SingletClass::HasAdjacentPair);
    }
    let singlets = pi.cycles().iter().filter(|c| c.len() == 1).count();
    if singlets >= 2 {
        return Ok(SingletClass::HasTwoSinglets);
    }
    if singlets == 0 && is_spoke(pi, tau) {
        return Ok(SingletClass::Spoke);
    }
    Ok(SingletClass::Other)
}

/// True when every cycle of `π` is a two-element bridge and the pairing
/// follows reversed cyclic order: `π(τ(a)) = τ⁻¹(π(a))` across circles.
fn is_spoke(pi: &Perm, tau: &Perm) -> bool {
    let circles = tau.cycles();
    if circles.len() != 2 || circles[0].len() != circles[1].len() {
        return false;
    }
    let first = &circles[0];
    let all_pairs = pi.cycles().iter().all(|c| {
        c.len() == 2 && first.contains(&c[0]) != first.contains(&c[1])
    });
    if !all_pairs {
        return false;
    }
    first
        .iter()
        .all(|&a| pi.apply(tau.apply(a)) == tau.inverse().apply(pi.apply(a)))
}

/// A partitioned permutation: a disc-noncrossing `π` with a coarsening `𝒰`
/// of its orbits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsPair {
    pub partition: SetPartition,
    pub perm: Perm,
}

impl PsPair {
    /// Validated constructor: `partition ⪰ Π(perm)`.
    pub fn new(partition: SetPartition, perm: Perm) -> Result<PsPair> {
        if partition.ground() != perm.ground() {
            return Err(Error::GroundMismatch("partition vs permutation".into()));
        }
        if !orbit_partition(&perm).leq(&partition) {
            return Err(Error::BadInput(
                "partition does not coarsen the permutation's orbits".into(),
            ));
        }
        Ok(PsPair { partition, perm })
    }

    /// True when exactly one block glues two cycles of `perm`, one per
    /// circle, and every other block is a single cycle.
    pub fn is_prime(&self, shape: AnnulusShape) -> bool {
        let orbits = orbit_partition(&self.perm);
        let mut glue_blocks = 0usize;
        for block in self.partition.blocks() {
            let inner = orbits.restrict(block).unwrap();
            match inner.num_blocks() {
                1 => {}
                2 => {
                    let b0 = &inner.blocks()[0];
                    let b1 = &inner.blocks()[1];
                    let b0_first = b0.iter().all(|&x| shape.in_first(x));
                    let b1_first = b1.iter().all(|&x| shape.in_first(x));
                    let b0_second = b0.iter().all(|&x| !shape.in_first(x));
                    let b1_second = b1.iter().all(|&x| !shape.in_first(x));
                    let one_each = (b0_first && b1_second) || (b0_second && b1_first);
                    if !one_each {
                        return false;
                    }
                    glue_blocks += 1;
                }
                _ => return false,
            }
        }
        glue_blocks == 1
    }
}

/// `PS(p,q)`: pairs `(𝒰, π)` with `π ∈ S_disc-nc(p,q)` and `𝒰 ⪰ Π(π)`,
/// enumerated as coarsenings of the orbit partition.
pub fn enumerate_ps(shape: AnnulusShape) -> Result<Vec<PsPair>> {
    let mut out = Vec::new();
    for pi in enumerate_disc_nc(shape)? {
        let orbits = orbit_partition(&pi);
        let block_ids: Vec<i64> = (0..orbits.num_blocks() as i64).collect();
        for grouping in crate::partition::enumerate_partitions(&block_ids) {
            let blocks: Vec<Vec<i64>> = grouping
                .blocks()
                .iter()
                .map(|g| {
                    g.iter()
                        .flat_map(|&bi| orbits.blocks()[bi as usize].iter().copied())
                        .sorted()
                        .collect()
                })
                .collect();
            let u = SetPartition::from_blocks(&blocks).unwrap();
            out.push(PsPair::new(u, pi.clone()).unwrap());
        }
    }
    Ok(out)
}

/// `PS′(p,q)`: pairs where exactly one block of `𝒰` glues one cycle from
/// each circle; enumerated directly from the cycle pairs.
pub fn enumerate_ps_prime(shape: AnnulusShape) -> Result<Vec<PsPair>> {
    let mut out = Vec::new();
    for pi in enumerate_disc_nc(shape)? {
        let cycles = pi.orbit_blocks();
        let first: Vec<usize> = (0..cycles.len())
            .filter(|&i| shape.in_first(cycles[i][0]))
            .collect();
        let second: Vec<usize> = (0..cycles.len())
            .filter(|&i| !shape.in_first(cycles[i][0]))
            .collect();
        for &i in &first {
            for &j in &second {
                let mut blocks: Vec<Vec<i64>> = Vec::new();
                let glued: Vec<i64> = cycles[i]
                    .iter()
                    .chain(cycles[j].iter())
                    .copied()
                    .sorted()
                    .collect();
                blocks.push(glued);
                for (k, c) in cycles.iter().enumerate() {
                    if k != i && k != j {
                        blocks.push(c.clone());
                    }
                }
                let u = SetPartition::from_blocks(&blocks).unwrap();
                let pair = PsPair::new(u, pi.clone()).unwrap();
                debug_assert!(pair.is_prime(shape));
                out.push(pair);
            }
        }
    }
    Ok(out)
}

/// All-bridge noncrossing permutations on a two-cycle base `rho` (arbitrary
/// labels), by exhaustive filtering.
pub fn all_bridge_perms(rho: &Perm) -> Result<Vec<Perm>> {
    let circles = rho.cycles();
    if circles.len() != 2 {
        return Err(Error::BadInput(format!(
            "all-bridge enumeration needs a 2-cycle base, got {} cycles",
            circles.len()
        )));
    }
    let first = &circles[0];
    Ok(enumerate_nc(rho)?
        .into_iter()
        .filter(|pi| {
            pi.cycles().iter().all(|c| {
                c.iter().any(|x| first.contains(x)) && c.iter().any(|x| !first.contains(x))
            })
        })
        .collect())
}

/// Rebuild an annular noncrossing permutation from its disc restriction, a
/// choice of outside faces, and an all-bridge skeleton.
///
/// `pi0 ⪯ rho` must be disc-noncrossing; `u1`/`u2` must be cycles of
/// `ρπ₀⁻¹`, one per circle; `sigma1` must be all-bridge noncrossing on
/// `τ|_{u1 ∪ u2}`. Returns the unique annular `π ⪯ ρ̂` with `π|_τ = π₀`
/// and these outside faces.
pub fn reconstruct_from_skeleton(
    pi0: &Perm,
    rho: &Perm,
    shape: AnnulusShape,
    u1: &[i64],
    u2: &[i64],
    sigma1: &Perm,
) -> Result<Perm> {
    let kr_inv_pi0 = kreweras_inv(pi0, rho); // ρπ₀⁻¹
    let k: Vec<i64> = u1.iter().chain(u2.iter()).copied().sorted().collect();
    let mut pairs: Vec<(i64, i64)> = Vec::with_capacity(pi0.len());
    for &x in sigma1.ground() {
        pairs.push((x, sigma1.apply(x)));
    }
    for &x in pi0.ground() {
        if k.binary_search(&x).is_err() {
            pairs.push((x, kr_inv_pi0.apply(x)));
        }
    }
    let sigma = Perm::from_pairs(&pairs)?;
    // π = Kr_ρ(σ) = σ⁻¹ρ inverts σ = ρπ⁻¹.
    let pi = sigma.inverse().compose(rho);
    if !is_noncrossing_chi(&pi, &shape.tau()) {
        return Err(Error::NotNoncrossing);
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{binomial, Int};

    fn example_shape() -> AnnulusShape {
        AnnulusShape::new(6, 7)
    }

    fn example_pi() -> Perm {
        Perm::parse_on_range("(1)(2,10,13,7,6)(3,4,9)(5)(8)(11,12)", 13).unwrap()
    }

    fn example_pi0() -> Perm {
        Perm::parse_on_range("(1)(2,6)(3,4)(5)(7,10,13)(8)(9)(11,12)", 13).unwrap()
    }

    #[test]
    fn euler_characteristic_golden() {
        let shape = example_shape();
        let tau = shape.tau();
        let pi0 = example_pi0();
        // Kr_τ(π₀) has 7 cycles: χ = 2 + 8 + 7 − 13 = 4.
        assert_eq!(kreweras(&pi0, &tau).cycle_count(), 7);
        assert_eq!(euler_char(&pi0, &tau), 4);
        // The two-component disc permutation is noncrossing: 4 = 2·2.
        assert!(is_noncrossing_chi(&pi0, &tau));

        // π = ρ gives the identity complement: χ = 2#(ρ).
        assert_eq!(euler_char(&tau, &tau), 2 * tau.cycle_count() as i64);
        // π = id gives the base itself as complement: χ = 2#(ρ).
        let id = Perm::identity_n(13);
        assert_eq!(euler_char(&id, &tau), 2 * tau.cycle_count() as i64);
    }

    #[test]
    fn noncrossing_examples() {
        let tau4 = Perm::tau_n(4);
        let nc = Perm::parse_on_range("(1,3)(2)", 4).unwrap();
        assert!(is_noncrossing_chi(&nc, &tau4));
        assert!(is_noncrossing_conditions(&nc, &tau4).unwrap());

        let crossing = Perm::parse_on_range("(1,3)(2,4)", 4).unwrap();
        assert!(!is_noncrossing_chi(&crossing, &tau4));
        assert!(!is_noncrossing_conditions(&crossing, &tau4).unwrap());

        let shape = example_shape();
        let tau = shape.tau();
        assert!(is_noncrossing_chi(&example_pi(), &tau));
        assert!(is_noncrossing_conditions(&example_pi(), &tau).unwrap());
        assert_eq!(euler_char(&example_pi(), &tau), 2);

        // Three-cycle bases are rejected by the pattern criterion.
        let tau3 = Perm::parse_on_range("(1,2)(3,4)(5)", 5).unwrap();
        let id5 = Perm::identity_n(5);
        assert!(is_noncrossing_conditions(&id5, &tau3).is_err());
    }

    #[test]
    fn criteria_agree_small() {
        // Exhaustive agreement for discs n ≤ 5 and annuli p+q ≤ 5.
        for n in 1..=5usize {
            let tau = Perm::tau_n(n);
            for pi in all_perms(tau.ground()).unwrap() {
                assert_eq!(
                    is_noncrossing_chi(&pi, &tau),
                    is_noncrossing_conditions(&pi, &tau).unwrap(),
                    "disc n={n} π={pi}"
                );
            }
        }
        for p in 1..=4usize {
            for q in 1..=(5 - p).min(4) {
                let shape = AnnulusShape::new(p, q);
                let tau = shape.tau();
                for pi in all_perms(tau.ground()).unwrap() {
                    assert_eq!(
                        is_noncrossing_chi(&pi, &tau),
                        is_noncrossing_conditions(&pi, &tau).unwrap(),
                        "annulus ({p},{q}) π={pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_nc_disc(3).unwrap().len(), 5);
        assert_eq!(enumerate_nc_disc(4).unwrap().len(), 14);

        let ann11: Vec<String> = enumerate_ann_nc(AnnulusShape::new(1, 1))
            .unwrap()
            .iter()
            .map(|p| p.to_cycle_string())
            .collect();
        assert_eq!(ann11, vec!["(1,2)".to_string()]);
        assert_eq!(enumerate_disc_nc(AnnulusShape::new(1, 1)).unwrap().len(), 1);

        // S_disc-nc(p,q) ≅ S_nc(p) × S_nc(q).
        for (p, q) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let disc = enumerate_disc_nc(AnnulusShape::new(p, q)).unwrap().len();
            let c = |m: usize| enumerate_nc_disc(m).unwrap().len();
            assert_eq!(disc, c(p) * c(q));
        }
    }

    #[test]
    fn bound_guard() {
        let ground: Vec<i64> = (1..=13).collect();
        assert!(matches!(
            all_perms(&ground),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn bridges_golden() {
        let shape = example_shape();
        let b = bridges(&example_pi(), shape).unwrap();
        assert_eq!(b, vec![vec![2, 10, 13, 7, 6], vec![3, 4, 9]]);
        // Bridges of the complement π⁻¹τ.
        let kr = kreweras(&example_pi(), &shape.tau());
        assert_eq!(
            kr.to_cycle_string(),
            "(1,6)(2,9)(3)(4,5,7,8)(10,12)(11)(13)"
        );
        let kb = bridges(&kr, shape).unwrap();
        assert_eq!(kb, vec![vec![2, 9], vec![4, 5, 7, 8]]);

        // Each bridge crosses over exactly once in each direction.
        let pi = example_pi();
        for bridge in &b {
            let out_first = bridge
                .iter()
                .filter(|&&a| shape.in_first(a) && !shape.in_first(pi.apply(a)))
                .count();
            let out_second = bridge
                .iter()
                .filter(|&&a| !shape.in_first(a) && shape.in_first(pi.apply(a)))
                .count();
            assert_eq!((out_first, out_second), (1, 1));
        }

        // (1,3)(2,4) is crossing on the disc but is two parallel bridges on
        // the annulus; the alternating 4-cycle is crossing there.
        let parallel = Perm::parse_on_range("(1,3)(2,4)", 4).unwrap();
        assert_eq!(
            bridges(&parallel, AnnulusShape::new(2, 2)).unwrap().len(),
            2
        );
        let crossing = Perm::parse_on_range("(1,3,2,4)", 4).unwrap();
        assert!(bridges(&crossing, AnnulusShape::new(2, 2)).is_err());
    }

    #[test]
    fn disc_restriction_golden() {
        let shape = example_shape();
        let pi0 = restrict_to_cycles(&example_pi(), &shape.tau());
        assert_eq!(pi0, example_pi0());
    }

    #[test]
    fn outside_faces_goldens() {
        let shape = example_shape();
        // Left diagram: faces of τπ₀⁻¹ are (3,5,6) and (8,9,10).
        let (f1, f2) = outside_faces(&example_pi(), shape).unwrap();
        assert_eq!((f1, f2), (vec![3, 5, 6], vec![8, 9, 10]));
        // The opposite-convention faces of π₀⁻¹τ are (2,4,5) and (7,8,9).
        let (g1, g2) = outside_faces_kr(&example_pi(), shape).unwrap();
        assert_eq!((g1, g2), (vec![2, 4, 5], vec![7, 8, 9]));

        // Right diagram of the same figure: same π₀, different faces.
        let right = Perm::parse_on_range("(1)(2,13,7,10,6)(3,4)(5)(8)(9)(11,12)", 13).unwrap();
        assert_eq!(restrict_to_cycles(&right, &shape.tau()), example_pi0());
        let (r1, r2) = outside_faces(&right, shape).unwrap();
        assert_eq!((r1, r2), (vec![3, 5, 6], vec![11, 13]));
        let (s1, s2) = outside_faces_kr(&right, shape).unwrap();
        assert_eq!((s1, s2), (vec![2, 4, 5], vec![10, 12]));
    }

    #[test]
    fn outside_faces_cover_complement_bridges() {
        // Exhaustive check for small annuli: the face elements are exactly
        // the elements of the complement's bridges.
        for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let shape = AnnulusShape::new(p, q);
            let tau = shape.tau();
            for pi in enumerate_ann_nc(shape).unwrap() {
                let (f1, f2) = outside_faces(&pi, shape).unwrap();
                let covered: Vec<i64> =
                    f1.iter().chain(f2.iter()).copied().sorted().collect();
                let kr_inv = kreweras_inv(&pi, &tau); // τπ⁻¹
                let bridge_elems: Vec<i64> = bridge_cycles(&kr_inv, shape)
                    .into_iter()
                    .flatten()
                    .sorted()
                    .collect();
                assert_eq!(covered, bridge_elems, "({p},{q}) π={pi}");
            }
        }
    }

    #[test]
    fn opposite_golden_and_involution() {
        let shape = AnnulusShape::new(3, 2);
        let pi = Perm::parse_on_range("(1,4)(2)(3)(5)", 5).unwrap();
        assert_eq!(opposite(&pi, shape).to_cycle_string(), "(1,5)(2)(3)(4)");
        assert_eq!(opposite(&opposite(&pi, shape), shape), pi);

        // Opposites are noncrossing on the reversed base, with the same
        // complement cycle type.
        for (p, q) in [(2, 2), (3, 2), (2, 3)] {
            let shape = AnnulusShape::new(p, q);
            let tau = shape.tau();
            let tau_op = tau_opposite(shape);
            for pi in enumerate_nc_pq(shape).unwrap() {
                let op = opposite(&pi, shape);
                assert!(is_noncrossing_chi(&op, &tau_op));
                assert_eq!(
                    kreweras(&op, &tau_op).cycle_type(),
                    kreweras(&pi, &tau).cycle_type()
                );
            }
        }
    }

    #[test]
    fn singlet_classification() {
        let tau4 = Perm::tau_n(4);
        let pi = Perm::parse_on_range("(1,3)(2)(4)", 4).unwrap();
        assert_eq!(
            singlet_classify(&pi, &tau4).unwrap(),
            SingletClass::HasTwoSinglets
        );

        let tau3 = Perm::tau_n(3);
        let pi = Perm::parse_on_range("(1,2)(3)", 3).unwrap();
        assert_eq!(
            singlet_classify(&pi, &tau3).unwrap(),
            SingletClass::HasAdjacentPair
        );

        let tau22 = AnnulusShape::new(2, 2).tau();
        let pi = Perm::parse_on_range("(1,4)(2,3)", 4).unwrap();
        assert_eq!(singlet_classify(&pi, &tau22).unwrap(), SingletClass::Spoke);

        let crossing = Perm::parse_on_range("(1,3)(2,4)", 4).unwrap();
        assert!(singlet_classify(&crossing, &Perm::tau_n(4)).is_err());
    }

    #[test]
    fn singlet_lemma_exhaustive() {
        // Disc: no adjacent pair forces at least two singlets (n ≥ 2).
        for n in 2..=6usize {
            let tau = Perm::tau_n(n);
            for pi in enumerate_nc(&tau).unwrap() {
                let class = singlet_classify(&pi, &tau).unwrap();
                assert!(
                    class == SingletClass::HasAdjacentPair
                        || class == SingletClass::HasTwoSinglets,
                    "disc n={n} π={pi} class={class:?}"
                );
            }
        }
        // Annulus: no adjacent pair and no singlets forces the spoke form.
        for (p, q) in [(1, 1), (2, 2), (3, 3), (2, 3), (1, 3)] {
            let shape = AnnulusShape::new(p, q);
            let tau = shape.tau();
            for pi in enumerate_ann_nc(shape).unwrap() {
                let adjacent = pi
                    .ground()
                    .iter()
                    .any(|&a| tau.apply(a) != a && pi.cycle_of(a).contains(&tau.apply(a)));
                let singlets = pi.cycles().iter().filter(|c| c.len() == 1).count();
                if !adjacent && singlets == 0 {
                    assert_eq!(
                        singlet_classify(&pi, &tau).unwrap(),
                        SingletClass::Spoke,
                        "({p},{q}) π={pi}"
                    );
                    assert_eq!(p, q);
                }
            }
        }
        // Spoke count: p rotations each way collapse to p distinct pairings.
        let spokes = enumerate_ann_nc(AnnulusShape::new(3, 3))
            .unwrap()
            .into_iter()
            .filter(|pi| {
                singlet_classify(&pi, &AnnulusShape::new(3, 3).tau()).unwrap()
                    == SingletClass::Spoke
            })
            .count();
        assert_eq!(spokes, 3);
    }

    #[test]
    fn ps_families() {
        let shape = AnnulusShape::new(2, 1);
        let ps = enumerate_ps(shape).unwrap();
        // Every pair is a valid coarsening.
        for pair in &ps {
            assert!(orbit_partition(&pair.perm).leq(&pair.partition));
        }
        let prime = enumerate_ps_prime(shape).unwrap();
        for pair in &prime {
            assert!(pair.is_prime(shape));
        }
        // PS′ pairs are exactly the prime members of PS.
        let prime_from_ps = ps
            .iter()
            .filter(|pair| pair.is_prime(shape))
            .cloned()
            .collect::<Vec<_>>();
        assert_eq!(prime.len(), prime_from_ps.len());
        for pair in &prime {
            assert!(prime_from_ps.contains(pair));
        }
    }

    #[test]
    fn all_bridge_count_formula() {
        // Σ_k C(r,k) C(s,k) k counts all-bridge noncrossing permutations.
        for (r, s) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
            let shape = AnnulusShape::new(r, s);
            let got = all_bridge_perms(&shape.tau()).unwrap().len();
            let want: Int = (1..=r.min(s) as i64)
                .map(|k| binomial(r as i64, k) * binomial(s as i64, k) * Int::from(k))
                .sum();
            assert_eq!(Int::from(got as i64), want, "({r},{s})");
        }
    }

    #[test]
    fn skeleton_reconstruction_round_trip() {
        // For each disc π₀ ⪯ ρ, every choice of outside faces and all-bridge
        // skeleton yields a distinct annular π with π|_τ = π₀ and those
        // faces; together they exhaust the annular π with ρπ⁻¹-bridges
        // inside the chosen ρ-cycles. Here: the full sweep at (2,2).
        let shape = AnnulusShape::new(2, 2);
        let tau = shape.tau();
        let discs = enumerate_disc_nc(shape).unwrap();
        let anns = enumerate_ann_nc(shape).unwrap();
        for rho in &discs {
            for pi0 in &discs {
                if !orbit_partition(pi0).leq(&orbit_partition(rho))
                    || !is_noncrossing_chi(pi0, rho)
                {
                    continue;
                }
                let kr_inv_pi0 = kreweras_inv(pi0, rho);
                let faces = kr_inv_pi0.cycles();
                let mut constructed = Vec::new();
                for u1 in faces.iter().filter(|c| shape.in_first(c[0])) {
                    for u2 in faces.iter().filter(|c| !shape.in_first(c[0])) {
                        let k: Vec<i64> =
                            u1.iter().chain(u2.iter()).copied().sorted().collect();
                        let tau_k = tau.induced(&k).unwrap();
                        for sigma1 in all_bridge_perms(&tau_k).unwrap() {
                            let pi = reconstruct_from_skeleton(
                                pi0, rho, shape, u1, u2, &sigma1,
                            )
                            .unwrap();
                            assert_eq!(restrict_to_cycles(&pi, &tau), *pi0);
                            let (f1, f2) = outside_faces_in(&pi, rho, shape).unwrap();
                            assert_eq!((&f1, &f2), (u1, u2));
                            constructed.push(pi);
                        }
                    }
                }
                // Uniqueness: distinct choices give distinct π.
                let mut sorted = constructed.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), constructed.len());
                // Completeness: these are exactly the annular π below the
                // hatted ρ with π|_τ = π₀ — bridge elements confined to one
                // ρ-cycle per circle.
                let rho_orbits = orbit_partition(rho);
                let expected: Vec<&Perm> = anns
                    .iter()
                    .filter(|pi| {
                        if restrict_to_cycles(pi, &tau) != *pi0 {
                            return false;
                        }
                        let elems: Vec<i64> =
                            bridge_cycles(pi, shape).into_iter().flatten().collect();
                        let one_block = |side: Vec<i64>| {
                            let b = rho_orbits.block_containing(side[0]).unwrap();
                            side.iter().all(|x| b.contains(x))
                        };
                        one_block(
                            elems.iter().copied().filter(|&x| shape.in_first(x)).collect(),
                        ) && one_block(
                            elems.iter().copied().filter(|&x| !shape.in_first(x)).collect(),
                        )
                    })
                    .collect();
                assert_eq!(constructed.len(), expected.len(), "ρ={rho} π₀={pi0}");
                for pi in &constructed {
                    assert!(expected.contains(&pi));
                }
            }
        }
    }

    #[test]
    fn spliced_cycle_is_symmetric() {
        let shape = AnnulusShape::new(3, 4);
        let tau = shape.tau();
        for &x in &shape.first_circle() {
            for &y in &shape.second_circle() {
                let a = spliced_cycle(&tau, x, y);
                let b = spliced_cycle(&tau, y, x);
                // Same cycle up to rotation.
                assert_eq!(a.len(), b.len());
                let n = a.len();
                assert!((0..n).any(|r| (0..n).all(|i| a[i] == b[(i + r) % n])));
            }
        }
    }
}
