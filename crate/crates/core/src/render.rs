//! Monospaced drawings of trees.
//!
//! Leaves sit on the top row, each vertex is drawn on the row of its
//! level with the root at the bottom, and the natural label of every
//! branching is printed between the two edges it joins. A vertex row looks
//! like `+-3-+---5-+`: the `+` marks are the incoming edges and the
//! outgoing edge leaves from the leftmost one.

use crate::tree::{IncreasingTree, LevelNode, PlanarTree};

/// Draws an increasing tree, one row per level, with the level printed in
/// a left margin.
pub fn render_increasing(t: &IncreasingTree) -> String {
    draw(t.root_node(), true)
}

/// Draws a planar tree; vertices are placed by height above the leaves.
pub fn render_planar(t: &PlanarTree) -> String {
    fn by_height(t: &PlanarTree) -> LevelNode {
        match t {
            PlanarTree::Leaf => LevelNode::Leaf,
            PlanarTree::Node(ch) => {
                let children: Vec<LevelNode> = ch.iter().map(by_height).collect();
                let level = children.iter().map(height).max().unwrap_or(0) + 1;
                LevelNode::Vertex { level, children }
            }
        }
    }
    fn height(n: &LevelNode) -> u32 {
        match n {
            LevelNode::Leaf => 0,
            LevelNode::Vertex { level, .. } => *level,
        }
    }
    draw(&by_height(t), false)
}

struct Layout {
    rows: Vec<u32>,
    spacing: usize,
    width: usize,
    vertices: Vec<(u32, Vec<usize>)>,
    // (column, level of the lower end, level of the upper end)
    edges: Vec<(usize, u32, u32)>,
    leaves: Vec<usize>,
    root_col: usize,
}

fn draw(root: &LevelNode, margin: bool) -> String {
    if matches!(root, LevelNode::Leaf) {
        return "*".to_string();
    }
    let branchings = count_branchings(root);
    let spacing = branchings.to_string().len() + 1;
    let mut layout = Layout {
        rows: Vec::new(),
        spacing,
        width: 0,
        vertices: Vec::new(),
        edges: Vec::new(),
        leaves: Vec::new(),
        root_col: 0,
    };
    let mut next_leaf = 0usize;
    layout.root_col = place(root, &mut layout, &mut next_leaf);
    let parent_level = root_level(root);
    layout.edges.push((layout.root_col, parent_level, u32::MAX));
    layout.rows.sort_unstable();
    layout.rows.dedup();
    layout.width = layout.leaves.last().copied().unwrap_or(0) + 1;

    let pad = if margin {
        layout.rows.last().copied().unwrap_or(0).to_string().len() + 1
    } else {
        0
    };
    let mut lines = Vec::new();

    let mut top = vec![' '; layout.width];
    for &c in &layout.leaves {
        top[c] = '*';
    }
    lines.push(finish(" ".repeat(pad), top));

    let mut label = 0usize;
    let mut slot_labels = Vec::new();
    label_slots(root, &mut label, &mut slot_labels);

    for &row in &layout.rows {
        let mut line = vec![' '; layout.width];
        for &(col, low, high) in &layout.edges {
            if low < row && row < high {
                line[col] = '|';
            }
        }
        for (vi, (level, cols)) in layout.vertices.iter().enumerate() {
            if *level != row {
                continue;
            }
            let (first, last) = (cols[0], *cols.last().expect("children"));
            for cell in &mut line[first..=last] {
                *cell = '-';
            }
            for &c in cols {
                line[c] = '+';
            }
            for (s, w) in cols.windows(2).enumerate() {
                let text = slot_labels[vi][s].to_string();
                let gap = w[1] - w[0] - 1;
                let start = w[0] + 1 + (gap.saturating_sub(text.len())) / 2;
                for (k, ch) in text.chars().enumerate() {
                    line[start + k] = ch;
                }
            }
        }
        let prefix = if margin {
            format!("{:>w$} ", row, w = pad - 1)
        } else {
            String::new()
        };
        lines.push(finish(prefix, line));
    }

    let mut bottom = vec![' '; layout.width];
    bottom[layout.root_col] = '|';
    lines.push(finish(" ".repeat(pad), bottom));
    lines.join("\n")
}

fn finish(prefix: String, cells: Vec<char>) -> String {
    let body: String = cells.into_iter().collect();
    format!("{prefix}{body}").trim_end().to_string()
}

fn root_level(n: &LevelNode) -> u32 {
    match n {
        LevelNode::Leaf => 0,
        LevelNode::Vertex { level, .. } => *level,
    }
}

fn count_branchings(n: &LevelNode) -> usize {
    match n {
        LevelNode::Leaf => 0,
        LevelNode::Vertex { children, .. } => children.len() - 1 + children.iter().map(count_branchings).sum::<usize>(),
    }
}

/// Returns the column of the outgoing edge of `n`. Vertices are recorded
/// in pre-order.
fn place(n: &LevelNode, layout: &mut Layout, next_leaf: &mut usize) -> usize {
    match n {
        LevelNode::Leaf => {
            let col = *next_leaf * layout.spacing;
            *next_leaf += 1;
            layout.leaves.push(col);
            col
        }
        LevelNode::Vertex { level, children } => {
            let index = layout.vertices.len();
            layout.vertices.push((*level, Vec::new()));
            layout.rows.push(*level);
            let mut cols = Vec::with_capacity(children.len());
            for c in children {
                let col = place(c, layout, next_leaf);
                layout.edges.push((col, root_level(c), *level));
                cols.push(col);
            }
            let out = cols[0];
            layout.vertices[index].1 = cols;
            out
        }
    }
}

/// Natural labels of the slots of every vertex, vertices in pre-order.
fn label_slots(n: &LevelNode, next: &mut usize, out: &mut Vec<Vec<usize>>) {
    if let LevelNode::Vertex { children, .. } = n {
        let index = out.len();
        out.push(Vec::new());
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                *next += 1;
                out[index].push(*next);
            }
            label_slots(c, next, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_tree_is_one_leaf() {
        assert_eq!(render_planar(&PlanarTree::Leaf), "*");
        assert_eq!(render_increasing(&IncreasingTree::trivial()), "*");
    }

    #[test]
    fn two_corolla_is_a_caret() {
        assert_eq!(render_planar(&PlanarTree::corolla(2)), "* *\n+1+\n|");
        let t: IncreasingTree = "(**)@1".parse().unwrap();
        assert_eq!(render_increasing(&t), "  * *\n1 +1+\n  |");
    }

    #[test]
    fn passing_edges_are_drawn() {
        let t: IncreasingTree = "((**)*)@2,1".parse().unwrap();
        assert_eq!(render_increasing(&t), "  * * *\n1 +1+ |\n2 +-2-+\n  |");
    }
}
