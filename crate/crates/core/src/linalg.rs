//! Exact rank by Gaussian elimination.

use crate::coeff::Coefficient;

/// Rank of a dense matrix over an exact field. `cost` ranks candidate pivots
/// within a column so that simple entries are preferred; it does not affect
/// the result.
pub fn rank_by<K, F>(mut rows: Vec<Vec<K>>, cost: F) -> usize
where
    K: Coefficient,
    F: Fn(&K) -> usize,
{
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| cost(&rows[i][col]));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let prow: Vec<K> = rows[rank].iter().map(|x| x.mul_ref(&inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                if !prow[j].is_zero() {
                    row[j] = row[j].sub_ref(&f.mul_ref(&prow[j]));
                }
            }
        }
        rows[rank] = prow;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank<K: Coefficient>(rows: Vec<Vec<K>>) -> usize {
    rank_by(rows, |_| 0)
}
