//! Gentzen-style layout: premises side by side above a rule line, the rule
//! label to the right of the line, the conclusion centred below it.
//! Hypothesis leaves carry no line; they are written `label: formula`.

use crate::proof_format::{Justification, Lemma, ProofNode, Rule};

use super::{formula, rule_label, scope, RenderError, RenderOptions};

const GAP: usize = 3;

fn cols(s: &str) -> usize {
    s.chars().count()
}

/// Lines of equal display width.
struct Block {
    lines: Vec<String>,
    width: usize,
}

impl Block {
    fn empty() -> Block {
        Block { lines: Vec::new(), width: 0 }
    }

    fn line(s: String) -> Block {
        Block { width: cols(&s), lines: vec![s] }
    }

    fn stack(lines: Vec<String>) -> Block {
        let width = lines.iter().map(|l| cols(l)).max().unwrap_or(0);
        Block { lines, width }.padded(width)
    }

    fn padded(mut self, width: usize) -> Block {
        for l in &mut self.lines {
            let n = cols(l);
            l.push_str(&" ".repeat(width - n));
        }
        self.width = width;
        self
    }

    fn shifted(mut self, by: usize) -> Block {
        for l in &mut self.lines {
            l.insert_str(0, &" ".repeat(by));
        }
        self.width += by;
        self
    }

    /// Side by side, bottom lines aligned.
    fn beside(blocks: Vec<Block>) -> Block {
        let height = blocks.iter().map(|b| b.lines.len()).max().unwrap_or(0);
        let mut lines = vec![String::new(); height];
        for (i, b) in blocks.iter().enumerate() {
            let top = height - b.lines.len();
            for (row, line) in lines.iter_mut().enumerate() {
                if i > 0 {
                    line.push_str(&" ".repeat(GAP));
                }
                match row.checked_sub(top) {
                    Some(r) => line.push_str(&b.lines[r]),
                    None => line.push_str(&" ".repeat(b.width)),
                }
            }
        }
        Block::stack(lines)
    }
}

pub(super) fn render(lemma: &Lemma, opts: &RenderOptions) -> Result<String, RenderError> {
    let block = layout(lemma, &lemma.root, &mut Vec::new(), opts);
    if block.width > opts.max_width {
        return Err(RenderError::WidthExceeded {
            width: block.width,
            max_width: opts.max_width,
            widest: widest_fitting(lemma, opts),
        });
    }
    let mut out = String::new();
    for l in block.lines {
        out.push_str(l.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Follows the widest premise down to the first subtree that fits.
fn widest_fitting(lemma: &Lemma, opts: &RenderOptions) -> Vec<usize> {
    let mut path = Vec::new();
    let mut node = &lemma.root;
    loop {
        let widths: Vec<usize> = (0..node.children.len())
            .map(|i| {
                path.push(i);
                let w = layout(lemma, &node.children[i], &mut path, opts).width;
                path.pop();
                w
            })
            .collect();
        let Some((i, &w)) = widths.iter().enumerate().max_by_key(|&(i, w)| (*w, std::cmp::Reverse(i))) else {
            return path;
        };
        path.push(i);
        if w <= opts.max_width {
            return path;
        }
        node = &node.children[i];
    }
}

fn conclusion_text(lemma: &Lemma, node: &ProofNode, path: &[usize], opts: &RenderOptions) -> String {
    let mut s = String::new();
    if opts.show_contexts {
        s.push_str(&scope(lemma, path).join(", "));
        s.push_str(if opts.unicode { " ⊢ " } else { " |- " });
    }
    if node.rule == Rule::Hyp {
        s.push_str(node.reference.as_deref().unwrap_or("?"));
        s.push_str(": ");
    }
    s.push_str(&formula(&node.conclusion, opts));
    s
}

fn layout(lemma: &Lemma, node: &ProofNode, path: &mut Vec<usize>, opts: &RenderOptions) -> Block {
    let text = conclusion_text(lemma, node, path, opts);
    if node.rule == Rule::Hyp {
        return Block::line(text);
    }
    let premises = if node.rule == Rule::Chain {
        Block::stack(node.steps.iter().map(|s| {
            let why = match &s.justification {
                Justification::Refl => "refl".to_string(),
                Justification::Named { name, instances } => {
                    let mut w = name.clone();
                    for (x, t) in instances {
                        w.push_str(&format!(" {{{x} := {t}}}"));
                    }
                    w
                }
            };
            format!("{} = {}  by {why}", s.lhs, s.rhs)
        }).collect())
    } else if node.children.is_empty() {
        Block::empty()
    } else {
        let kids = node
            .children
            .iter()
            .enumerate()
            .map(|(i, c)| {
                path.push(i);
                let b = layout(lemma, c, path, opts);
                path.pop();
                b
            })
            .collect();
        Block::beside(kids)
    };
    let bar_width = premises.width.max(cols(&text)).max(1);
    let bar_char = if opts.unicode { "─" } else { "-" };
    let label = rule_label(node);
    let offset = (bar_width - premises.width) / 2;
    let mut lines = premises.shifted(offset).lines;
    lines.push(format!("{} {label}", bar_char.repeat(bar_width)));
    lines.push(format!("{}{text}", " ".repeat((bar_width - cols(&text)) / 2)));
    Block::stack(lines)
}
