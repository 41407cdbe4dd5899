//! Region-outcome checks with a Floyd–Warshall radius oracle.

use burling_core::region::*;
use burling_core::Vertex;

/// δ-components by pairwise distances, then a brute-force center search.
pub fn oracle_radius_ok(d: &[Vec<usize>], class: &[Vertex], delta: usize, rho: usize) -> bool {
    let mut comp: Vec<usize> = (0..class.len()).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for a in 0..class.len() {
        for b in a + 1..class.len() {
            if d[class[a]][class[b]] <= delta {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra] = rb;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Vertex>> = Default::default();
    for i in 0..class.len() {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(class[i]);
    }
    groups
        .values()
        .all(|grp| (0..d.len()).any(|c| grp.iter().all(|&v| d[c][v] <= rho)))
}

/// Checks an outcome whose host is known to be `K_t`-minor-free, with `γ = δ`.
pub fn check_minor_free(rm: &RegionModel, s: &[Vertex], delta: usize, t: usize, what: &str) {
    let out = partition_or_model(rm, s, delta, delta, t).unwrap();
    let Outcome::Partition(p) = out else {
        panic!("{what}: model returned for a K_{t}-minor-free host");
    };
    assert_eq!(validate_partition(&rm.g, &p), Ok(()), "{what}");
    assert!(p.classes.len() <= 1 << (t - 2), "{what}: {} classes", p.classes.len());
    assert_eq!(p.rho, t * delta + 1);
    if rm.g.n() <= 80 {
        let d = super::all_distances(&rm.g);
        for class in &p.classes {
            assert!(oracle_radius_ok(&d, class, delta, t * delta + 1), "{what}: oracle radius check");
        }
    }
}

pub fn check_any(rm: &RegionModel, s: &[Vertex], gamma: usize, delta: usize, t: usize) -> bool {
    match partition_or_model(rm, s, gamma, delta, t).unwrap() {
        Outcome::Partition(p) => {
            assert_eq!(validate_partition(&rm.g, &p), Ok(()));
            assert!(p.classes.len() <= 1 << (t - 2));
            false
        }
        Outcome::Model(m) => {
            assert_eq!(minor_certificate(&rm.h, &m), Ok(()));
            assert_eq!(validate_t_model(rm, &m), Ok(()));
            true
        }
    }
}
