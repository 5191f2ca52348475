//! Homomorphisms between disingquandles and a backtracking isomorphism search.

use crate::disingquandle::{Color, OrientedDisingquandle};
use crate::error::{Error, Result};
use crate::table::{Element, Table};

/// A total map between carriers, `mapping[x] = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub mapping: Vec<Element>,
}

impl Morphism {
    pub fn identity(n: usize) -> Self {
        Morphism { mapping: (0..n).collect() }
    }

    pub fn constant(n: usize, value: Element) -> Self {
        Morphism { mapping: vec![value; n] }
    }

    pub fn apply(&self, x: Element) -> Element {
        self.mapping[x]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.mapping.len()];
        self.mapping.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    }

    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut mapping = vec![0; self.mapping.len()];
        for (x, &v) in self.mapping.iter().enumerate() {
            mapping[v] = x;
        }
        Some(Morphism { mapping })
    }
}

fn table_pairs<'a>(a: &'a OrientedDisingquandle, b: &'a OrientedDisingquandle) -> [(&'a Table, &'a Table); 4] {
    [
        (a.star(Color::One), b.star(Color::One)),
        (a.star(Color::Two), b.star(Color::Two)),
        (a.r1(), b.r1()),
        (a.r2(), b.r2()),
    ]
}

/// Whether `f` preserves `*1, *2, R1` and `R2` (each map to its primed
/// counterpart).
pub fn is_homomorphism(src: &OrientedDisingquandle, dst: &OrientedDisingquandle, f: &Morphism) -> Result<bool> {
    if f.mapping.len() != src.size() {
        return Err(Error::SizeMismatch { left: src.size(), right: f.mapping.len() });
    }
    if let Some(&bad) = f.mapping.iter().find(|&&v| v >= dst.size()) {
        return Err(Error::ElementOutOfRange { element: bad, n: dst.size() });
    }
    let n = src.size();
    let pairs = table_pairs(src, dst);
    Ok((0..n).all(|x| (0..n).all(|y| pairs.iter().all(|(s, d)| f.apply(s.get(x, y)) == d.get(f.apply(x), f.apply(y))))))
}

/// Isomorphism-invariant fingerprint of one element.
fn profiles(d: &OrientedDisingquandle) -> Vec<Vec<usize>> {
    let n = d.size();
    let tables = [d.star(Color::One), d.star(Color::Two), d.r1(), d.r2()];
    (0..n)
        .map(|x| {
            let mut p = Vec::new();
            for t in tables {
                p.push(usize::from(t.get(x, x) == x));
                p.push((0..n).filter(|&y| t.get(x, y) == x).count());
                p.push((0..n).filter(|&y| t.get(y, x) == x).count());
                p.push((0..n).filter(|&y| t.get(x, y) == y).count());
                // multiplicity pattern of the row and column values
                for line in [(0..n).map(|y| t.get(x, y)).collect::<Vec<_>>(), (0..n).map(|y| t.get(y, x)).collect()] {
                    let mut counts = vec![0usize; n];
                    for v in line {
                        counts[v] += 1;
                    }
                    counts.sort_unstable();
                    p.extend(counts);
                }
            }
            p
        })
        .collect()
}

struct IsoSearch<'a> {
    pairs: [(&'a Table, &'a Table); 4],
    src_profile: Vec<Vec<usize>>,
    dst_profile: Vec<Vec<usize>>,
    forward: Vec<Option<Element>>,
    used: Vec<bool>,
    /// assigned source elements in assignment order
    assigned: Vec<Element>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, x: Element, v: Element) {
        self.forward[x] = Some(v);
        self.used[v] = true;
        self.assigned.push(x);
    }

    fn undo_to(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().unwrap();
            let v = self.forward[x].take().unwrap();
            self.used[v] = false;
        }
    }

    /// Closes the partial map under the operations; false on a conflict.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.assigned.len() {
            let end = self.assigned.len();
            for i in 0..end {
                for j in 0..end {
                    if i < from && j < from {
                        continue;
                    }
                    let (x, y) = (self.assigned[i], self.assigned[j]);
                    let (fx, fy) = (self.forward[x].unwrap(), self.forward[y].unwrap());
                    for k in 0..4 {
                        let (s, d) = self.pairs[k];
                        let image = s.get(x, y);
                        let target = d.get(fx, fy);
                        match self.forward[image] {
                            Some(v) if v != target => return false,
                            Some(_) => {}
                            None => {
                                if self.used[target] || self.src_profile[image] != self.dst_profile[target] {
                                    return false;
                                }
                                self.assign(image, target);
                            }
                        }
                    }
                }
            }
            from = end;
        }
        true
    }

    fn search(&mut self) -> bool {
        let Some(x) = self.forward.iter().position(Option::is_none) else {
            return true;
        };
        let mark = self.assigned.len();
        for v in 0..self.used.len() {
            if self.used[v] || self.src_profile[x] != self.dst_profile[v] {
                continue;
            }
            self.assign(x, v);
            if self.propagate(mark) && self.search() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Finds a bijective homomorphism `a -> b`, trying smaller images first.
pub fn find_isomorphism(a: &OrientedDisingquandle, b: &OrientedDisingquandle) -> Option<Morphism> {
    let n = a.size();
    if b.size() != n {
        return None;
    }
    let src_profile = profiles(a);
    let dst_profile = profiles(b);
    let mut sorted_a = src_profile.clone();
    let mut sorted_b = dst_profile.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut search = IsoSearch {
        pairs: table_pairs(a, b),
        src_profile,
        dst_profile,
        forward: vec![None; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
    };
    if !search.search() {
        return None;
    }
    let f = Morphism { mapping: search.forward.into_iter().map(Option::unwrap).collect() };
    debug_assert!(is_homomorphism(a, b, &f).unwrap_or(false));
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical() -> OrientedDisingquandle {
        let star = Table::from_fn(10, |x, y| (3 * x + 8 * y) % 10).unwrap();
        let r1 = Table::from_fn(10, |x, y| (4 * x + 2 * y + 5 * x * y) % 10).unwrap();
        let r2 = Table::from_fn(10, |x, y| (6 * x + 5 * x * y) % 10).unwrap();
        OrientedDisingquandle::new(star.clone(), star, r1, r2).unwrap()
    }

    #[test]
    fn identity_and_constant_are_homomorphisms() {
        let d = canonical();
        assert!(is_homomorphism(&d, &d, &Morphism::identity(10)).unwrap());
        assert!(is_homomorphism(&d, &d, &Morphism::constant(10, 0)).unwrap());
    }

    #[test]
    fn translation_is_not_a_homomorphism() {
        // R1(0+1, 1+1) = R1(1, 2) = 8 but R1(0, 1) + 1 = 3.
        let d = canonical();
        let shift = Morphism { mapping: (0..10).map(|x| (x + 1) % 10).collect() };
        assert!(!is_homomorphism(&d, &d, &shift).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let d = canonical();
        assert!(is_homomorphism(&d, &d, &Morphism::identity(3)).is_err());
        assert!(is_homomorphism(&d, &d, &Morphism::constant(10, 12)).is_err());
    }

    #[test]
    fn relabelled_structure_is_found_isomorphic() {
        let d = canonical();
        let perm: Vec<_> = (0..10).map(|x| (3 * x + 1) % 10).collect();
        let e = d.relabel(&perm).unwrap();
        let f = find_isomorphism(&d, &e).expect("permutation witnesses an isomorphism");
        assert!(f.is_bijective());
        assert!(is_homomorphism(&d, &e, &f).unwrap());
        assert!(is_homomorphism(&e, &d, &f.inverse().unwrap()).unwrap());
    }

    #[test]
    fn self_isomorphism_is_verified() {
        let d = canonical();
        let f = find_isomorphism(&d, &d).unwrap();
        assert!(is_homomorphism(&d, &d, &f).unwrap());
        assert_eq!(f, Morphism::identity(10));
    }
}
