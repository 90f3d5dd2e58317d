use super::algebra::{validate_skew_algebra, SkewAlgebra};
use super::bicat::CellFamily;
use super::expr::build::*;
use super::expr::{Obj1, SkewEnv};
use super::warping::{validate_skew_warping, SkewWarping};
use crate::fincore::Atom;
use crate::{Error, Result};

/// One component of a cell family together with every arrow that could fill it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub family: &'static str,
    pub key: Vec<Atom>,
    pub candidates: Vec<Atom>,
}

/// Result of trying every assignment of the structure cells, with the
/// 1-cell data held fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSearch {
    pub slots: usize,
    pub assignments: u128,
    pub valid: usize,
    /// Every component has exactly one candidate, so no alternative choice
    /// exists and the axioms can only fail by typing.
    pub rigid: bool,
}

fn candidates(base: &super::SkewBicategory, src: &Obj1, tgt: &Obj1) -> Vec<Atom> {
    base.hom(&src.src, &src.tgt)
        .hom(&src.name, &tgt.name)
        .elements()
        .to_vec()
}

/// Slots of `ν`, `ν0` and `κ`.
pub fn warping_slots(w: &SkewWarping) -> Result<Vec<Slot>> {
    let env = SkewEnv::with_warping(w);
    let s = &w.base;
    let mut out = Vec::new();
    for kk in w.nu.keys() {
        let [x, y, z, g, f] = &kk[..] else { continue };
        let (fc, gc) = (cell(x, w.t(y), f), cell(y, w.t(z), g));
        let tg = t(z, &gc);
        let src = env.eval_cell(&t(z, &comp(&tg, &fc)))?;
        let tgt = env.eval_cell(&comp(&tg, &t(y, &fc)))?;
        out.push(Slot {
            family: "nu",
            key: kk.clone(),
            candidates: candidates(s, &src, &tgt),
        });
    }
    for kk in w.nu0.keys() {
        let [x] = &kk[..] else { continue };
        let src = env.eval_cell(&t(x, &k(x)))?;
        let tgt = env.eval_cell(&unit(w.t(x)))?;
        out.push(Slot {
            family: "nu0",
            key: kk.clone(),
            candidates: candidates(s, &src, &tgt),
        });
    }
    for kk in w.kappa.keys() {
        let [x, y, f] = &kk[..] else { continue };
        let fc = cell(x, w.t(y), f);
        let src = env.eval_cell(&fc)?;
        let tgt = env.eval_cell(&comp(&t(y, &fc), &k(x)))?;
        out.push(Slot {
            family: "kappa",
            key: kk.clone(),
            candidates: candidates(s, &src, &tgt),
        });
    }
    Ok(out)
}

/// Slots of `νE` and `κE`.
pub fn algebra_slots(a: &SkewAlgebra) -> Result<Vec<Slot>> {
    let env = SkewEnv::with_algebra(a);
    let w = &a.warping;
    let s = &w.base;
    let obj = a.object.as_str();
    let mut out = Vec::new();
    for kk in a.cell_nu.keys() {
        let [x, y, g, f] = &kk[..] else { continue };
        let (fc, gc) = (cell(x, w.t(y), f), cell(y, obj, g));
        let eg = e(&gc);
        let src = env.eval_cell(&e(&comp(&eg, &fc)))?;
        let tgt = env.eval_cell(&comp(&eg, &t(y, &fc)))?;
        out.push(Slot {
            family: "nu",
            key: kk.clone(),
            candidates: candidates(s, &src, &tgt),
        });
    }
    for kk in a.cell_kappa.keys() {
        let [y, g] = &kk[..] else { continue };
        let gc = cell(y, obj, g);
        let src = env.eval_cell(&gc)?;
        let tgt = env.eval_cell(&comp(&e(&gc), &k(y)))?;
        out.push(Slot {
            family: "kappa",
            key: kk.clone(),
            candidates: candidates(s, &src, &tgt),
        });
    }
    Ok(out)
}

fn odometer<T: Clone>(
    slots: &[Slot],
    limit: u128,
    start: &T,
    assign: impl Fn(&mut T, &Slot, &Atom),
    mut visit: impl FnMut(&T),
) -> Result<u128> {
    let total = slots
        .iter()
        .try_fold(1u128, |acc, s| acc.checked_mul(s.candidates.len() as u128))
        .unwrap_or(u128::MAX);
    if total > limit {
        return Err(Error::Bounds(format!(
            "{total} cell assignments exceed the limit of {limit}"
        )));
    }
    if total == 0 {
        return Ok(0);
    }
    let mut idx = vec![0usize; slots.len()];
    loop {
        let mut v = start.clone();
        for (s, &i) in slots.iter().zip(&idx) {
            assign(&mut v, s, &s.candidates[i]);
        }
        visit(&v);
        let mut pos = 0;
        loop {
            if pos == slots.len() {
                return Ok(total);
            }
            idx[pos] += 1;
            if idx[pos] < slots[pos].candidates.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn set(fam: &mut CellFamily, key: &[Atom], v: &Atom) {
    fam.insert(key.to_vec(), v.clone());
}

/// Tries every choice of `ν`, `ν0`, `κ` for the 1-cell data of `w`.
pub fn search_warping_cells(w: &SkewWarping, limit: u128) -> Result<(CellSearch, Vec<SkewWarping>)> {
    let slots = warping_slots(w)?;
    let mut found = Vec::new();
    let total = odometer(
        &slots,
        limit,
        w,
        |v, s, a| match s.family {
            "nu" => set(&mut v.nu, &s.key, a),
            "nu0" => set(&mut v.nu0, &s.key, a),
            _ => set(&mut v.kappa, &s.key, a),
        },
        |v| {
            if validate_skew_warping(v).is_valid() {
                found.push(v.clone());
            }
        },
    )?;
    let search = CellSearch {
        slots: slots.len(),
        assignments: total,
        valid: found.len(),
        rigid: slots.iter().all(|s| s.candidates.len() == 1),
    };
    Ok((search, found))
}

/// Tries every choice of `νE` and `κE` for the functors of `a`.
pub fn search_algebra_cells(a: &SkewAlgebra, limit: u128) -> Result<(CellSearch, Vec<SkewAlgebra>)> {
    let slots = algebra_slots(a)?;
    let mut found = Vec::new();
    let total = odometer(
        &slots,
        limit,
        a,
        |v, s, x| match s.family {
            "nu" => set(&mut v.cell_nu, &s.key, x),
            _ => set(&mut v.cell_kappa, &s.key, x),
        },
        |v| {
            if validate_skew_algebra(v).is_valid() {
                found.push(v.clone());
            }
        },
    )?;
    let search = CellSearch {
        slots: slots.len(),
        assignments: total,
        valid: found.len(),
        rigid: slots.iter().all(|s| s.candidates.len() == 1),
    };
    Ok((search, found))
}
