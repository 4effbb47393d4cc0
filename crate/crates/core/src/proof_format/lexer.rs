use super::{ParseError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Colon,
    Assign,
    Comma,
    Semi,
    Dot,
    Eq,
    Plus,
    Star,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Bot,
    Forall,
    Exists,
    Zero,
    Ident(String),
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Colon => ":",
            Tok::Assign => ":=",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Dot => ".",
            Tok::Eq => "=",
            Tok::Plus => "+",
            Tok::Star => "*",
            Tok::Not => "~",
            Tok::And => "/\\",
            Tok::Or => "\\/",
            Tok::Imp => "->",
            Tok::Iff => "<->",
            Tok::Bot => "_|_",
            Tok::Forall => "forall",
            Tok::Exists => "exists",
            Tok::Zero => "0",
            Tok::Ident(_) | Tok::Eof => "",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// No whitespace or comment between this token and the previous one.
    pub glued: bool,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut glued = false;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            glued = false;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            glued = false;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            glued = false;
            continue;
        }
        let pos = Pos { line, column: col };
        let rest = |s: &str| chars[i..].iter().take(s.chars().count()).copied().eq(s.chars());
        let (tok, len) = if rest("_|_") {
            (Tok::Bot, 3)
        } else if rest("<->") {
            (Tok::Iff, 3)
        } else if rest("->") {
            (Tok::Imp, 2)
        } else if rest("/\\") {
            (Tok::And, 2)
        } else if rest("\\/") {
            (Tok::Or, 2)
        } else if rest(":=") {
            (Tok::Assign, 2)
        } else if is_ident_start(c) {
            let start = i;
            let mut j = i;
            while j < chars.len() && is_ident_char(chars[j]) {
                j += 1;
            }
            let word: String = chars[start..j].iter().collect();
            let tok = match word.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                _ => Tok::Ident(word),
            };
            (tok, j - start)
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ':' => Tok::Colon,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '.' => Tok::Dot,
                '=' => Tok::Eq,
                '+' => Tok::Plus,
                '*' => Tok::Star,
                '~' | '¬' => Tok::Not,
                '∧' => Tok::And,
                '∨' => Tok::Or,
                '→' | '⇒' => Tok::Imp,
                '↔' | '≡' | '⇔' => Tok::Iff,
                '⊥' => Tok::Bot,
                '∀' => Tok::Forall,
                '∃' => Tok::Exists,
                '0' if !chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) => Tok::Zero,
                other => {
                    return Err(ParseError::syntax(pos, format!("unexpected character `{other}`")))
                }
            };
            (tok, 1)
        };
        out.push(Token { tok, pos, glued });
        i += len;
        col += len;
        glued = true;
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, column: col }, glued: false });
    Ok(out)
}
