use std::collections::HashMap;

use crate::bitset::BitSet;

/// A nonempty face, identified by the sorted indices of the parent's vertices
/// lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

/// Address of a face inside a [`FaceLattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceRef {
    pub dim: usize,
    pub index: usize,
}

/// Hasse diagram of the nonempty faces, grouped by dimension. The polytope
/// itself is the single node of the top level; the empty face is left out.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    levels: Vec<Vec<Face>>,
    // up[k][i]: indices into level k+1 of faces covering face (k, i)
    up: Vec<Vec<Vec<usize>>>,
    // down[k][i]: indices into level k-1 of faces covered by (k, i)
    down: Vec<Vec<Vec<usize>>>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.levels.len() - 1
    }

    /// The k-dimensional faces; empty when `k` exceeds the dimension.
    pub fn faces_of_dim(&self, k: usize) -> &[Face] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn face(&self, f: FaceRef) -> &Face {
        &self.levels[f.dim][f.index]
    }

    pub fn top(&self) -> FaceRef {
        FaceRef {
            dim: self.dim(),
            index: 0,
        }
    }

    /// Face counts `f_0, ..., f_dim`, the top face included.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Faces of dimension `f.dim + 1` containing `f`.
    pub fn covers(&self, f: FaceRef) -> impl Iterator<Item = FaceRef> + '_ {
        self.up[f.dim][f.index].iter().map(move |&index| FaceRef {
            dim: f.dim + 1,
            index,
        })
    }

    /// Facets of the face `f`, i.e. the faces of dimension `f.dim - 1` it covers.
    pub fn facets_of(&self, f: FaceRef) -> impl Iterator<Item = FaceRef> + '_ {
        self.down[f.dim][f.index].iter().map(move |&index| FaceRef {
            dim: f.dim - 1,
            index,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (FaceRef, &Face)> + '_ {
        self.levels.iter().enumerate().flat_map(|(dim, level)| {
            level
                .iter()
                .enumerate()
                .map(move |(index, face)| (FaceRef { dim, index }, face))
        })
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Closure algorithm on the vertex-facet incidences: faces are generated
    /// bottom-up from the vertices; the covers of a face `G` are the
    /// inclusion-minimal closures of `G ∪ {v}`.
    pub(crate) fn build(n_vertices: usize, dim: usize, facets: &[BitSet]) -> Self {
        let closure = |set: &BitSet| -> BitSet {
            let mut acc = BitSet::full(n_vertices);
            for f in facets {
                if set.is_subset(f) {
                    acc.intersect_with(f);
                }
            }
            acc
        };

        let mut sets: Vec<Vec<BitSet>> = Vec::with_capacity(dim + 1);
        let mut up: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim + 1);

        let mut level0: Vec<BitSet> = Vec::with_capacity(n_vertices);
        for v in 0..n_vertices {
            let mut s = BitSet::new(n_vertices);
            s.insert(v);
            let c = closure(&s);
            if !level0.contains(&c) {
                level0.push(c);
            }
        }
        sets.push(level0);

        for k in 0..dim {
            let mut next: Vec<BitSet> = Vec::new();
            let mut index: HashMap<BitSet, usize> = HashMap::new();
            let mut covers_k = Vec::with_capacity(sets[k].len());
            for g in &sets[k] {
                let mut candidates: Vec<BitSet> = Vec::new();
                for v in 0..n_vertices {
                    if g.contains(v) {
                        continue;
                    }
                    let mut s = g.clone();
                    s.insert(v);
                    let c = closure(&s);
                    if !candidates.contains(&c) {
                        candidates.push(c);
                    }
                }
                let minimal: Vec<&BitSet> = candidates
                    .iter()
                    .filter(|c| !candidates.iter().any(|o| o != *c && o.is_subset(c)))
                    .collect();
                let mut ids = Vec::with_capacity(minimal.len());
                for c in minimal {
                    let id = *index.entry(c.clone()).or_insert_with(|| {
                        next.push(c.clone());
                        next.len() - 1
                    });
                    ids.push(id);
                }
                covers_k.push(ids);
            }
            sets.push(next);
            up.push(covers_k);
        }
        up.push(vec![Vec::new(); sets[dim].len()]);

        // canonical order: lexicographic on sorted vertex lists within a level
        let mut levels: Vec<Vec<Face>> = Vec::with_capacity(dim + 1);
        let mut remaps: Vec<Vec<usize>> = Vec::with_capacity(dim + 1);
        for (k, level) in sets.iter().enumerate() {
            let mut faces: Vec<(usize, Vec<usize>)> = level
                .iter()
                .map(|s| s.iter().collect())
                .enumerate()
                .collect();
            faces.sort_by(|a, b| a.1.cmp(&b.1));
            let mut remap = vec![0; faces.len()];
            for (new, (old, _)) in faces.iter().enumerate() {
                remap[*old] = new;
            }
            levels.push(
                faces
                    .into_iter()
                    .map(|(_, vertices)| Face { vertices, dim: k })
                    .collect(),
            );
            remaps.push(remap);
        }

        let mut up_sorted: Vec<Vec<Vec<usize>>> =
            levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        let mut down: Vec<Vec<Vec<usize>>> =
            levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for k in 0..dim {
            for (old, ids) in up[k].iter().enumerate() {
                let i = remaps[k][old];
                let mut mapped: Vec<usize> = ids.iter().map(|&j| remaps[k + 1][j]).collect();
                mapped.sort_unstable();
                for &j in &mapped {
                    down[k + 1][j].push(i);
                }
                up_sorted[k][i] = mapped;
            }
        }
        for level in &mut down {
            for ids in level.iter_mut() {
                ids.sort_unstable();
            }
        }

        FaceLattice {
            levels,
            up: up_sorted,
            down,
        }
    }
}
