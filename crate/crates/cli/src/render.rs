//! Box-drawing pictures of mosaics, three characters square per tile.

use knot_mosaic::Mosaic;

/// Rows of each tile's 3x3 glyph. Strands leave a tile at the middle of an edge.
const GLYPHS: [[&str; 3]; 11] = [
    ["   ", "   ", "   "],
    ["   ", "─╮ ", " │ "],
    ["   ", " ╭─", " │ "],
    [" │ ", " ╰─", "   "],
    [" │ ", "─╯ ", "   "],
    ["   ", "───", "   "],
    [" │ ", " │ ", " │ "],
    [" ╰╮", "╮ ╰", "╰╮ "],
    ["╭╯ ", "╯ ╭", " ╭╯"],
    // vertical strand over: the horizontal one is broken
    [" │ ", "╴│╶", " │ "],
    [" ╵ ", "───", " ╷ "],
];

#[allow(clippy::needless_range_loop)]
pub fn render(m: &Mosaic) -> String {
    let n = m.n();
    let mut out = String::new();
    for i in 0..n {
        for row in 0..3 {
            for j in 0..n {
                out.push_str(GLYPHS[m.get(i, j).index() as usize][row]);
            }
            out.push('\n');
        }
    }
    out
}
