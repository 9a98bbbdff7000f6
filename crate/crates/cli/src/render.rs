//! Monospace drawings of placements, labeled paths and machine traces.

use rookstack::machine::{MachineState, TraceStep};
use rookstack::{LabeledDyckPath, RookPlacement, Step};

/// Board cells as `[ ]`, rooks as `[x]`, top row first.
pub fn board(rp: &RookPlacement) -> String {
    let b = rp.board();
    let mut out = String::new();
    for row in (1..=b.rows()).rev() {
        for col in (1..=b.columns()).take_while(|&c| b.height(c) >= row) {
            out.push_str(if rp.has_rook(col, row) { "[x]" } else { "[ ]" });
        }
        out.push('\n');
    }
    out
}

/// The path as a mountain range, then its steps and vertex labels.
pub fn path(l: &LabeledDyckPath) -> String {
    let steps = l.path().steps();
    let heights = l.path().heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; steps.len()]; top];
    for (j, s) in steps.iter().enumerate() {
        match s {
            Step::U => grid[heights[j]][j] = '/',
            Step::D => grid[heights[j] - 1][j] = '\\',
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&format!("steps:  {}\n", l.path()));
    let labels: Vec<String> = l.labels().iter().map(|x| x.to_string()).collect();
    out.push_str(&format!("labels: {}\n", labels.join(",")));
    out
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn trace_row(op: &str, s: &MachineState) -> String {
    let row = format!(
        "{op:<3}{:<14}{:<14}{:<14}{}",
        list(&s.input),
        list(&s.stack1),
        list(&s.stack2),
        list(&s.output)
    );
    format!("{}\n", row.trim_end())
}

/// One row per operation; stacks are listed top first.
pub fn trace(initial: &MachineState, steps: &[TraceStep]) -> String {
    let mut out = format!(
        "{:<3}{:<14}{:<14}{:<14}{}\n",
        "op", "input", "stack1", "stack2", "output"
    );
    out.push_str(&trace_row("", initial));
    for step in steps {
        out.push_str(&trace_row(&step.op.to_string(), &step.state));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rookstack::{chi, execute_traced, pi_map, Permutation, StackWord};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn example_board() {
        let drawn = board(&chi(&perm("42513")).unwrap());
        let expected = "\
[ ][ ][x]
[x][ ][ ]
[ ][ ][ ][ ][x]
[ ][x][ ][ ][ ]
[ ][ ][ ][x][ ]
";
        assert_eq!(drawn, expected);
    }

    #[test]
    fn small_path() {
        let drawn = path(&pi_map(&chi(&perm("12")).unwrap()));
        assert_eq!(drawn, " /\\\n/  \\\nsteps:  UUDD\nlabels: 0,1,2,1,0\n");
    }

    #[test]
    fn trace_ends_sorted() {
        let p = perm("1");
        let w: StackWord = "stp".parse().unwrap();
        let steps = execute_traced(&w, &p, true).unwrap();
        let drawn = trace(&MachineState::new(&p), &steps);
        assert_eq!(drawn.lines().count(), 5);
        assert!(drawn.lines().last().unwrap().starts_with("p "));
        assert!(drawn.lines().last().unwrap().ends_with('1'));
    }
}
