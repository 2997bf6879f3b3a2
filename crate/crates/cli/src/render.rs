use lpm::{PathPresentation, PathWord, Step};

/// Glyphs: lower path `-` and `|`, upper path `=` and `:`, shared edges
/// `#`, lattice points `+` on a path and `.` elsewhere, marks `*`.
pub fn grid(pres: &PathPresentation, marks: &[(usize, usize)]) -> String {
    let (m, r) = (pres.m(), pres.r());
    let (w, h) = (2 * m + 1, 2 * r + 1);
    let mut canvas = vec![vec![' '; w]; h];
    for y in 0..=r {
        for x in 0..=m {
            canvas[2 * y][2 * x] = '.';
        }
    }
    let mut draw = |word: &PathWord, horizontal: char, vertical: char| {
        let (mut x, mut y) = (0, 0);
        canvas[0][0] = '+';
        for &s in word.steps() {
            let (cell, glyph) = match s {
                Step::E => ((2 * y, 2 * x + 1), horizontal),
                Step::N => ((2 * y + 1, 2 * x), vertical),
            };
            let slot = &mut canvas[cell.0][cell.1];
            *slot = if *slot == ' ' { glyph } else { '#' };
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            canvas[2 * y][2 * x] = '+';
        }
    };
    draw(pres.lower(), '-', '|');
    draw(pres.upper(), '=', ':');
    for &(x, y) in marks {
        canvas[2 * y][2 * x] = '*';
    }
    let mut out = String::new();
    for row in canvas.iter().rev() {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

/// The four corners of the square at prefix length `i` with side `k`.
pub fn square_corners(pres: &PathPresentation, i: usize, k: usize) -> Vec<(usize, usize)> {
    let lower = pres.lower().prefix(i);
    let upper = pres.upper().prefix(i);
    let (x0, x1) = (upper.m(), lower.m());
    let (y0, y1) = (lower.r(), upper.r());
    debug_assert_eq!((x1 - x0, y1 - y0), (k, k));
    vec![(x0, y0), (x1, y0), (x0, y1), (x1, y1)]
}
