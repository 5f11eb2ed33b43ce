//! The 6x6 homology matrix of the genus-3 example and the facts checked
//! about it.

use num_bigint::BigInt;

use crate::exactla::{snf, IntMatrix, MonicIntPoly};

const M: [[i64; 6]; 6] = [
    [-2, -2, -1, -3, 4, 0],
    [9, 4, 0, 9, -6, 9],
    [9, 0, -2, 9, 0, 18],
    [6, 4, 2, 7, -8, 0],
    [9, 3, 0, 9, -5, 9],
    [0, -1, -1, 0, 2, 4],
];

pub fn genus3_matrix() -> IntMatrix {
    let rows: Vec<&[i64]> = M.iter().map(|r| &r[..]).collect();
    IntMatrix::from_i64(&rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus3Report {
    pub rank_m_minus_i: usize,
    /// Nonzero invariant factors of `M - I`.
    pub snf_nonzero: usize,
    pub det_bareiss: BigInt,
    pub det_cofactor: BigInt,
    pub charpoly: MonicIntPoly,
}

impl Genus3Report {
    pub fn ok(&self) -> bool {
        self.rank_m_minus_i == 2 && self.snf_nonzero == 2 && self.det_bareiss == self.det_cofactor
    }
}

pub fn verify_genus3() -> Genus3Report {
    let m = genus3_matrix();
    let shifted = m.sub(&IntMatrix::identity(6)).expect("same shape");
    Genus3Report {
        rank_m_minus_i: shifted.rank(),
        snf_nonzero: snf(&shifted).rank(),
        det_bareiss: m.det(),
        det_cofactor: m.det_cofactor(),
        charpoly: m.charpoly(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        let r = verify_genus3();
        assert!(r.ok(), "{r:?}");
        assert_eq!(genus3_matrix().row(0), &IntMatrix::from_i64(&[&[-2, -2, -1, -3, 4, 0]]).row(0)[..]);
    }

    #[test]
    fn printed_difference_matches() {
        let d = genus3_matrix().sub(&IntMatrix::identity(6)).unwrap();
        assert_eq!(d.row(5), IntMatrix::from_i64(&[&[0, -1, -1, 0, 2, 3]]).row(0));
        assert_eq!(d.row(3), IntMatrix::from_i64(&[&[6, 4, 2, 6, -8, 0]]).row(0));
    }
}
