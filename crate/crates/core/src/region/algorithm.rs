//! The layered partition-or-model recursion.
//!
//! Each recursive instance owns its regions and a sorted host-vertex index,
//! so adjacency is "regions share a host vertex" throughout and the work per
//! instance is proportional to `Σ|μ(v)|` up to a log factor.

use crate::error::{Error, Result};
use crate::graph::{delta_components, Graph, Vertex};

use super::certificate::{check_minor, validate_t_model};
use super::{set_components, validate_region_model, DisjointPartitionCertificate, PartitionCertificate, RegionModel, TModelCertificate};

/// Largest `t` accepted; the partition has up to `2^{t-2}` classes.
pub const MAX_T: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Model(TModelCertificate),
    Partition(PartitionCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AsdimOutcome {
    Model(TModelCertificate),
    Partition(DisjointPartitionCertificate),
}

struct Instance<'a> {
    h: &'a Graph,
    regions: Vec<Vec<Vertex>>,
    /// The vertex of the parent instance each vertex comes from.
    parent: Vec<usize>,
    s: Vec<usize>,
    gamma: usize,
    t: usize,
}

/// Host vertex -> owning regions, as a sorted key list with CSR ranges.
struct Index {
    keys: Vec<Vertex>,
    start: Vec<usize>,
    owners: Vec<usize>,
}

impl Index {
    fn new(regions: &[Vec<Vertex>]) -> Self {
        let mut pairs: Vec<(Vertex, usize)> = regions
            .iter()
            .enumerate()
            .flat_map(|(v, r)| r.iter().map(move |&x| (x, v)))
            .collect();
        pairs.sort_unstable();
        let mut keys = Vec::new();
        let mut start = Vec::new();
        for (p, &(x, _)) in pairs.iter().enumerate() {
            if keys.last() != Some(&x) {
                keys.push(x);
                start.push(p);
            }
        }
        start.push(pairs.len());
        Index {
            keys,
            start,
            owners: pairs.into_iter().map(|(_, v)| v).collect(),
        }
    }

    fn key(&self, x: Vertex) -> usize {
        self.keys.binary_search(&x).expect("host vertex of some region")
    }

    fn owners(&self, k: usize) -> &[usize] {
        &self.owners[self.start[k]..self.start[k + 1]]
    }
}

/// BFS layers of one component, each layer sorted.
struct Component {
    layers: Vec<Vec<usize>>,
}

impl Component {
    fn root(&self) -> usize {
        self.layers[0][0]
    }

    fn layer(&self, l: usize) -> &[usize] {
        self.layers.get(l).map_or(&[], Vec::as_slice)
    }
}

/// Per-instance BFS data shared by the children of all components.
struct Levels {
    dist: Vec<usize>,
    /// First layer whose region touches each indexed host vertex.
    cov: Vec<usize>,
    in_s: Vec<bool>,
}

type Pairs = Vec<(usize, Vec<Vertex>)>;

enum Solved {
    Model(Pairs),
    /// Exactly `2^{t-2}` classes, some possibly empty.
    Partition(Vec<Vec<usize>>),
}

impl<'a> Instance<'a> {
    fn n(&self) -> usize {
        self.regions.len()
    }

    /// Layers from `root` over unvisited vertices, truncated below `cap`.
    fn bfs(&self, idx: &Index, root: usize, cap: usize, dist: &mut [usize], hdone: &mut [bool]) -> Vec<Vec<usize>> {
        dist[root] = 0;
        let mut layers = vec![vec![root]];
        loop {
            let d = layers.len() - 1;
            if d >= cap {
                break;
            }
            let mut next = Vec::new();
            for &v in &layers[d] {
                for &x in &self.regions[v] {
                    let k = idx.key(x);
                    if std::mem::replace(&mut hdone[k], true) {
                        continue;
                    }
                    for &w in idx.owners(k) {
                        if dist[w] == usize::MAX {
                            dist[w] = d + 1;
                            next.push(w);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            layers.push(next);
        }
        layers
    }

    /// `μ(N^r[x])`, sorted.
    fn ball_regions(&self, idx: &Index, x: usize, r: usize) -> Vec<Vertex> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut hdone = vec![false; idx.keys.len()];
        let layers = self.bfs(idx, x, r, &mut dist, &mut hdone);
        let mut out: Vec<Vertex> = layers.iter().flatten().flat_map(|&v| self.regions[v].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check_model(&self, pairs: &Pairs) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(format!("intermediate model rejected: {what}")));
        if pairs.len() != self.t {
            return fail(format!("{} sets for t = {}", pairs.len(), self.t));
        }
        let sets: Vec<&[Vertex]> = pairs.iter().map(|(_, s)| s.as_slice()).collect();
        if let Err(e) = check_minor(self.h, &sets) {
            return fail(e.to_string());
        }
        let idx = Index::new(&self.regions);
        for (j, (x, set)) in pairs.iter().enumerate() {
            if self.s.binary_search(x).is_err() {
                return fail(format!("anchor {} not in S", j + 1));
            }
            let reach = self.ball_regions(&idx, *x, self.gamma);
            if let Some(y) = reach.iter().find(|y| set.binary_search(y).is_err()) {
                return fail(format!("set {} misses host vertex {y}", j + 1));
            }
        }
        Ok(())
    }

    /// The instance on `G'_{i-γ, i+γ+δ}` with `S ∩ V_{i+1, i+δ}`: one
    /// pseudo-vertex per component of `μ(v) \ μ(V_{0,i-γ-1})`, `v ∈ V_{i-γ}`,
    /// followed by the vertices of layers `i-γ+1 ..= i+γ+δ`.
    fn child(&self, idx: &Index, level: &Levels, comp: &Component, i: usize, delta: usize) -> Instance<'a> {
        let a = i - self.gamma;
        let mut regions = Vec::new();
        let mut parent = Vec::new();
        for &v in comp.layer(a) {
            let fresh: Vec<Vertex> = self.regions[v].iter().copied().filter(|&x| level.cov[idx.key(x)] == a).collect();
            for c in set_components(self.h, &fresh) {
                regions.push(c);
                parent.push(v);
            }
        }
        let mut carried: Vec<usize> = (a + 1..=i + self.gamma + delta)
            .flat_map(|l| comp.layer(l).iter().copied())
            .collect();
        carried.sort_unstable();
        let mut s = Vec::new();
        for v in carried {
            if level.in_s[v] && (i + 1..=i + delta).contains(&level.dist[v]) {
                s.push(regions.len());
            }
            regions.push(self.regions[v].clone());
            parent.push(v);
        }
        Instance {
            h: self.h,
            regions,
            parent,
            s,
            gamma: self.gamma + delta,
            t: self.t - 1,
        }
    }

    /// Appends `(x*, μ(V_{0,i-γ-1}))` to a model of the child at `i`,
    /// translated to this instance's vertices.
    fn extend(&self, comp: &Component, i: usize, child: &Instance, pairs: Pairs) -> Pairs {
        let mut out: Pairs = pairs.into_iter().map(|(x, set)| (child.parent[x], set)).collect();
        let mut base: Vec<Vertex> = (0..i - self.gamma)
            .flat_map(|l| comp.layer(l).iter().flat_map(|&v| self.regions[v].iter().copied()))
            .collect();
        base.sort_unstable();
        base.dedup();
        out.push((comp.root(), base));
        out
    }

    fn solve(&self, delta: usize) -> Result<Solved> {
        let idx = Index::new(&self.regions);
        let mut dist = vec![usize::MAX; self.n()];
        let mut hdone = vec![false; idx.keys.len()];
        let mut comps = Vec::new();
        for &x in &self.s {
            if dist[x] == usize::MAX {
                comps.push(Component {
                    layers: self.bfs(&idx, x, usize::MAX, &mut dist, &mut hdone),
                });
            }
        }
        let cov = (0..idx.keys.len())
            .map(|k| idx.owners(k).iter().map(|&v| dist[v]).min().unwrap())
            .collect();
        let mut in_s = vec![false; self.n()];
        for &x in &self.s {
            in_s[x] = true;
        }
        let level = Levels { dist, cov, in_s };
        let in_s = &level.in_s;
        let core = 2 * self.gamma + 1;
        let slots = 1usize << (self.t - 2);
        let mut classes = vec![Vec::new(); slots];
        for comp in &comps {
            let near = (0..=core).flat_map(|l| comp.layer(l).iter().copied()).filter(|&v| in_s[v]);
            if self.t == 2 {
                let far = (core + 1..comp.layers.len())
                    .find_map(|l| comp.layer(l).iter().find(|&&v| in_s[v]).map(|&y| (l, y)));
                let Some((l, y)) = far else {
                    classes[0].extend(near);
                    continue;
                };
                let i = core + (l - core - 1) / delta * delta;
                let child = self.child(&idx, &level, comp, i, delta);
                let local = child.parent.iter().rposition(|&p| p == y).unwrap();
                let t1 = child.ball_regions(&Index::new(&child.regions), local, child.gamma);
                let pairs = vec![(local, t1)];
                child.check_model(&pairs)?;
                return Ok(Solved::Model(self.extend(comp, i, &child, pairs)));
            }
            let half = slots / 2;
            classes[half].extend(near);
            let mut k = 0;
            loop {
                let i = core + k * delta;
                if i + 1 >= comp.layers.len() {
                    break;
                }
                let annulus = (i + 1..=i + delta).any(|l| comp.layer(l).iter().any(|&v| in_s[v]));
                if annulus {
                    let child = self.child(&idx, &level, comp, i, delta);
                    match child.solve(delta)? {
                        Solved::Model(pairs) => {
                            child.check_model(&pairs)?;
                            return Ok(Solved::Model(self.extend(comp, i, &child, pairs)));
                        }
                        Solved::Partition(parts) => {
                            let r = k % 2;
                            for (kk, part) in parts.into_iter().enumerate() {
                                classes[r * half + kk].extend(part.into_iter().map(|v| child.parent[v]));
                            }
                        }
                    }
                }
                k += 1;
            }
        }
        for c in &mut classes {
            c.sort_unstable();
        }
        Ok(Solved::Partition(classes))
    }
}

fn check_params(rm: &RegionModel, gamma: usize, delta: usize, t: usize) -> Result<()> {
    if delta == 0 || gamma < delta {
        return Err(Error::input(format!("need gamma >= delta >= 1, got gamma = {gamma}, delta = {delta}")));
    }
    if !(2..=MAX_T).contains(&t) {
        return Err(Error::input(format!("t must be in 2..={MAX_T}, got {t}")));
    }
    validate_region_model(rm).map_err(|e| Error::input(format!("invalid region model: {e}")))
}

/// Either a `(μ,S,γ,t)`-model or a partition of `S` into at most `2^{t-2}`
/// classes whose δ-components have radius at most `2γ+1+(t-2)δ`.
///
/// A returned model always passes [`validate_t_model`]; the partition is
/// returned as computed and should be checked with `validate_partition`.
pub fn partition_or_model(rm: &RegionModel, s: &[Vertex], gamma: usize, delta: usize, t: usize) -> Result<Outcome> {
    check_params(rm, gamma, delta, t)?;
    rm.g.check_vertices(s)?;
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut regions = rm.mu.clone();
    for r in &mut regions {
        r.sort_unstable();
        r.dedup();
    }
    let root = Instance {
        h: &rm.h,
        regions,
        parent: (0..rm.g.n()).collect(),
        s: s.clone(),
        gamma,
        t,
    };
    match root.solve(delta)? {
        Solved::Model(pairs) => {
            let cert = TModelCertificate { t, gamma, s, pairs };
            validate_t_model(rm, &cert).map_err(|e| Error::Internal(format!("model rejected: {e}")))?;
            Ok(Outcome::Model(cert))
        }
        Solved::Partition(classes) => Ok(Outcome::Partition(PartitionCertificate {
            delta,
            rho: 2 * gamma + 1 + (t - 2) * delta,
            max_classes: 1 << (t - 2),
            s,
            classes: classes.into_iter().filter(|c| !c.is_empty()).collect(),
        })),
    }
}

/// `γ = δ`, `S = V(g)`; each class is split into its δ-components, which
/// become the sets of one δ-disjoint family of radius at most `tδ+1`.
/// `δ = 0` gives the single family of singletons.
pub fn asdim_partition(rm: &RegionModel, delta: usize, t: usize) -> Result<AsdimOutcome> {
    if delta == 0 {
        validate_region_model(rm).map_err(|e| Error::input(format!("invalid region model: {e}")))?;
        let families = if rm.g.n() == 0 {
            Vec::new()
        } else {
            vec![(0..rm.g.n()).map(|v| vec![v]).collect()]
        };
        return Ok(AsdimOutcome::Partition(DisjointPartitionCertificate {
            delta,
            radius: 0,
            max_families: 1 << (t.max(2) - 2),
            families,
        }));
    }
    let all: Vec<Vertex> = (0..rm.g.n()).collect();
    match partition_or_model(rm, &all, delta, delta, t)? {
        Outcome::Model(m) => Ok(AsdimOutcome::Model(m)),
        Outcome::Partition(p) => {
            let families = p
                .classes
                .iter()
                .map(|c| delta_components(&rm.g, c, delta).map(|f| f.sets))
                .collect::<Result<_>>()?;
            Ok(AsdimOutcome::Partition(DisjointPartitionCertificate {
                delta,
                radius: t * delta + 1,
                max_families: p.max_classes,
                families,
            }))
        }
    }
}

/// A control oracle for `rm`: restricts the model to `S`, runs
/// [`asdim_partition`] and reports sets in the original numbering. A model
/// branch surfaces as [`Error::HostNotMinorFree`], translated likewise.
pub fn control_oracle(rm: &RegionModel, t: usize) -> impl Fn(&[Vertex], usize) -> Result<DisjointPartitionCertificate> + '_ {
    move |s: &[Vertex], delta: usize| {
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        let sub = rm.restrict(&s)?;
        validate_region_model(&sub).map_err(|e| Error::input(format!("restricted model invalid: {e}")))?;
        match asdim_partition(&sub, delta, t)? {
            AsdimOutcome::Partition(mut p) => {
                for set in p.families.iter_mut().flatten() {
                    for v in set.iter_mut() {
                        *v = s[*v];
                    }
                }
                Ok(p)
            }
            AsdimOutcome::Model(mut m) => {
                for (x, _) in &mut m.pairs {
                    *x = s[*x];
                }
                m.s = s.clone();
                Err(Error::HostNotMinorFree(Box::new(m)))
            }
        }
    }
}
