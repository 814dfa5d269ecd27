//! Smith normal form of small integer matrices, used to read off the
//! abelianization of a finitely presented group.

use alloc::vec::Vec;

/// Reduces `mat` (rows × cols) to Smith normal form and returns the nonzero
/// diagonal entries (positive, each dividing the next).
pub fn smith_diagonal(mut mat: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut diag = Vec::new();
    let mut r = 0;
    let mut c = 0;
    while r < rows && c < cols {
        // Find a pivot with the smallest nonzero absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in r..rows {
            for j in c..cols {
                if mat[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| mat[i][j].abs() < mat[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        mat.swap(r, pi);
        for row in mat.iter_mut() {
            row.swap(c, pj);
        }
        // Reduce column and row against the pivot until it divides them all.
        loop {
            let mut done = true;
            for i in (r + 1)..rows {
                let q = mat[i][c] / mat[r][c];
                if q != 0 {
                    for j in c..cols {
                        mat[i][j] -= q * mat[r][j];
                    }
                }
                if mat[i][c] != 0 {
                    done = false;
                }
            }
            for j in (c + 1)..cols {
                let q = mat[r][j] / mat[r][c];
                if q != 0 {
                    for i in r..rows {
                        mat[i][j] -= q * mat[i][c];
                    }
                }
                if mat[r][j] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
            // A smaller remainder may have appeared; re-pick it as pivot.
            let mut best = (r, c);
            for i in r..rows {
                for j in c..cols {
                    if mat[i][j] != 0 && mat[i][j].abs() < mat[best.0][best.1].abs() {
                        best = (i, j);
                    }
                }
            }
            mat.swap(r, best.0);
            for row in mat.iter_mut() {
                row.swap(c, best.1);
            }
        }
        // Ensure divisibility of the remaining block by the pivot.
        let p = mat[r][c].abs();
        let mut fixed = true;
        'outer: for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                if mat[i][j] % p != 0 {
                    // Fold the offending row into the pivot row and redo.
                    for jj in c..cols {
                        mat[r][jj] += mat[i][jj];
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }
        diag.push(p);
        r += 1;
        c += 1;
    }
    diag
}

/// `(rank, torsion)` of the cokernel of the matrix acting on `Z^cols`:
/// rank = cols - (number of nonzero diagonal entries), torsion = entries > 1.
pub fn cokernel(mat: Vec<Vec<i128>>, cols: usize) -> (usize, Vec<u64>) {
    let diag = smith_diagonal(mat);
    let rank = cols - diag.len();
    let torsion = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    (rank, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_like() {
        let d = smith_diagonal(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(d, vec![1, 1]);
    }

    #[test]
    fn torsion_detected() {
        // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3; SNF diagonal 1, 6 after coupling?
        // Diagonal matrix stays (2,3) only if gcd mixing is skipped; SNF
        // requires divisibility, giving (1, 6).
        let d = smith_diagonal(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(d, vec![1, 6]);
    }

    #[test]
    fn rank_deficient() {
        let (rank, torsion) = cokernel(vec![vec![1, 1, 0]], 3);
        assert_eq!(rank, 2);
        assert!(torsion.is_empty());
    }

    #[test]
    fn trefoil_relator_matrix() {
        // <s,t | s t s t^-1 s^-1 t^-1> abelianized: row (1, -1).
        let (rank, torsion) = cokernel(vec![vec![1, -1]], 2);
        assert_eq!(rank, 1);
        assert!(torsion.is_empty());
    }
}
