use super::hertel_mehlhorn::Decomposition;
use super::PartitionError;

/// Adjacency of convex pieces across essential diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    pub node_count: usize,
    /// `(piece, piece, diagonal id)` with the smaller piece first.
    pub edges: Vec<(usize, usize, usize)>,
}

impl DualTree {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of `piece` in ascending order.
    pub fn neighbours(&self, piece: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == piece {
                    Some(b)
                } else if b == piece {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|&(x, y, _)| (x, y) == (a.min(b), a.max(b)))
    }

    /// Connected and acyclic, by union-find plus the edge count.
    pub fn is_tree(&self) -> bool {
        if self.node_count == 0 || self.edges.len() + 1 != self.node_count {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.node_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b, _) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// One node per piece, one edge per essential diagonal.
pub fn dual_tree(decomposition: &Decomposition) -> DualTree {
    let edges = decomposition
        .piece_of_diagonal
        .iter()
        .enumerate()
        .map(|(d, &(a, b))| (a, b, d))
        .collect();
    DualTree {
        node_count: decomposition.piece_count(),
        edges,
    }
}

/// Node sequence of a depth-first traversal, listing a node on entry and
/// again after returning from each child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTour {
    pub sequence: Vec<usize>,
}

impl EulerTour {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn root(&self) -> usize {
        self.sequence[0]
    }
}

/// Euler tour from `root`, children visited in ascending piece id.
pub fn euler_tour(tree: &DualTree, root: usize) -> Result<EulerTour, PartitionError> {
    if root >= tree.node_count {
        return Err(PartitionError::RootNotFound(root));
    }
    let adjacency: Vec<Vec<usize>> = (0..tree.node_count).map(|p| tree.neighbours(p)).collect();
    let mut sequence = vec![root];
    // (node, parent, next child index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    while let Some(top) = stack.last_mut() {
        let (node, parent, idx) = *top;
        match adjacency[node][idx..].iter().position(|&c| c != parent) {
            Some(off) => {
                let child = adjacency[node][idx + off];
                top.2 = idx + off + 1;
                sequence.push(child);
                stack.push((child, node, 0));
            }
            None => {
                stack.pop();
                if let Some(&(up, _, _)) = stack.last() {
                    sequence.push(up);
                }
            }
        }
    }
    Ok(EulerTour { sequence })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> DualTree {
        DualTree {
            node_count: n,
            edges: edges.iter().enumerate().map(|(i, &(a, b))| (a, b, i)).collect(),
        }
    }

    #[test]
    fn tour_examples() {
        assert_eq!(euler_tour(&tree(1, &[]), 0).unwrap().sequence, vec![0]);
        assert_eq!(euler_tour(&tree(2, &[(0, 1)]), 0).unwrap().sequence, vec![0, 1, 0]);
        assert_eq!(
            euler_tour(&tree(3, &[(0, 2), (0, 1)]), 0).unwrap().sequence,
            vec![0, 1, 0, 2, 0]
        );
    }

    #[test]
    fn tour_from_inner_root() {
        let t = tree(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(euler_tour(&t, 1).unwrap().sequence, vec![1, 0, 1, 2, 1, 3, 1]);
        assert_eq!(euler_tour(&t, 3).unwrap().sequence, vec![3, 1, 0, 1, 2, 1, 3]);
    }

    #[test]
    fn missing_root() {
        assert!(matches!(euler_tour(&tree(2, &[(0, 1)]), 5), Err(PartitionError::RootNotFound(5))));
    }

    #[test]
    fn tree_detection() {
        assert!(tree(3, &[(0, 1), (1, 2)]).is_tree());
        assert!(!tree(3, &[(0, 1)]).is_tree());
        assert!(!tree(3, &[(0, 1), (0, 1)]).is_tree());
    }
}
