use super::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    TwoConnected,
    Bridge,
    IsolatedVertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<Vertex>,
    /// Edges `(u, w)` with `u < w`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    pub kind: BlockKind,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their sorted vertex lists.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn blocks_containing(&self, v: Vertex) -> impl Iterator<Item = &Block> + '_ {
        self.blocks.iter().filter(move |b| b.contains(v))
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

struct Frame {
    v: Vertex,
    parent: Vertex,
    next: usize,
}

/// Biconnected components by the Hopcroft-Tarjan edge-stack method, run
/// iteratively so deep graphs do not exhaust the call stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut blocks = Vec::new();
    if n == 1 {
        blocks.push(Block {
            vertices: vec![0],
            edges: Vec::new(),
            kind: BlockKind::IsolatedVertex,
        });
    } else {
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut stack = vec![Frame { v: 0, parent: UNSEEN, next: 0 }];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if let Some(&w) = g.neighbors(v).get(frame.next) {
                frame.next += 1;
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    stack.push(Frame { v: w, parent: v, next: 0 });
                } else if w != frame.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(top) = stack.last() else { break };
            let p = top.v;
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (p, v) {
                        break;
                    }
                }
                blocks.push(make_block(edges));
            }
        }
    }
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &x in &b.vertices {
            membership[x] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&x| membership[x] > 1).collect();
    BlockDecomposition { blocks, cut_vertices }
}

fn make_block(mut edges: Vec<(Vertex, Vertex)>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let kind = if edges.len() == 1 {
        BlockKind::Bridge
    } else {
        BlockKind::TwoConnected
    };
    Block { vertices, edges, kind }
}

/// True iff `g` is a single two-connected block.
pub(crate) fn is_two_connected(g: &Graph) -> bool {
    let d = block_decomposition(g);
    d.blocks.len() == 1 && d.blocks[0].kind == BlockKind::TwoConnected
}
