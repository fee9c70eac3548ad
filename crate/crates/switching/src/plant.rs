//! Random hosts with a planted Godsil–McKay switching set, used by the
//! verification harnesses.

use cospectra_graphs::{Graph, Xoshiro256StarStar};

/// Build a graph on `n` vertices containing a valid set `X` of size `2k`:
/// `G[X]` is regular, every outside vertex sees 0, k, or 2k vertices of
/// `X`, and at least one outside vertex sees exactly `k` (so the switch
/// moves edges). Returns the graph and the sorted planted set.
pub fn planted_gm_host(n: usize, k: usize, seed: u64) -> (Graph, Vec<usize>) {
    assert!(k >= 2 && n >= 2 * k + 2);
    let mut rng = Xoshiro256StarStar::new(seed ^ 0x6D_5E7);
    let m = 2 * k;

    // scatter X across the vertex range
    let mut all: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        all.swap(i, j);
    }
    let mut x: Vec<usize> = all[..m].to_vec();
    x.sort_unstable();
    let outside: Vec<usize> = (0..n).filter(|v| x.binary_search(v).is_err()).collect();

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // G[X]: empty, a perfect matching, or a cycle, all regular
    match rng.next_below(3) {
        1 => {
            for i in 0..k {
                edges.push((x[2 * i], x[2 * i + 1]));
            }
        }
        2 => {
            for i in 0..m {
                edges.push((x[i].min(x[(i + 1) % m]), x[i].max(x[(i + 1) % m])));
            }
        }
        _ => {}
    }

    // outside vertices attach to 0, k, or 2k vertices of X
    let mut split_count = 0;
    for (pos, &v) in outside.iter().enumerate() {
        let force_split = pos + 1 == outside.len() && split_count == 0;
        let roll = rng.next_below(100);
        if force_split || (45..85).contains(&roll) {
            split_count += 1;
            // random k-subset
            let mut idx: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                let j = rng.next_below(i as u64 + 1) as usize;
                idx.swap(i, j);
            }
            for &i in idx.iter().take(k) {
                edges.push((v.min(x[i]), v.max(x[i])));
            }
        } else if roll >= 85 {
            for &xv in &x {
                edges.push((v.min(xv), v.max(xv)));
            }
        }
    }

    // sparse background among the outside vertices
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i + 1..] {
            if rng.next_f64() < 0.18 {
                edges.push((a, b));
            }
        }
    }

    edges.sort_unstable();
    edges.dedup();
    (Graph::new(n, &edges).unwrap(), x)
}
