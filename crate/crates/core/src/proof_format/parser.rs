use std::collections::BTreeSet;

use super::lexer::{tokenize, Tok, Token};
use super::{
    Axiom, ChainStep, InstanceValue, Instantiation, Justification, Lemma, ParseError,
    ParseErrorKind, Pos, ProofDocument, ProofNode, Rule,
};
use crate::syntax::{find_cycle, ArityMismatch, Definition, Definitions, Formula, Signature, Term};

type PResult<T> = Result<T, ParseError>;

/// Parses a whole `.gpnd` document. Arity consistency and name uniqueness are
/// enforced here; logical validity is left to the kernel.
pub fn parse_document(src: &str) -> PResult<ProofDocument> {
    let mut p = Parser::new(src)?;
    let doc = p.document()?;
    Ok(doc)
}

pub fn parse_formula(src: &str) -> PResult<Formula> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub fn parse_term(src: &str) -> PResult<Term> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    sig: Signature,
}

fn later(a: ParseError, b: ParseError) -> ParseError {
    if (b.line, b.column) > (a.line, a.column) {
        b
    } else {
        a
    }
}

impl Parser {
    fn new(src: &str) -> PResult<Parser> {
        Ok(Parser { toks: tokenize(src)?, i: 0, sig: Signature::new() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn peek_token(&self) -> &Token {
        &self.toks[self.i]
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::syntax(self.pos(), msg))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Pos> {
        if *self.peek() == tok {
            Ok(self.advance().pos)
        } else {
            let found = self.peek().describe();
            self.error(format!("expected {}, found {found}", tok.describe()))
        }
    }

    fn expect_eof(&self) -> PResult<()> {
        match self.peek() {
            Tok::Eof => Ok(()),
            other => self.error(format!("unexpected {}", other.describe())),
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Pos)> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.advance().pos)),
            other => self.error(format!("expected {what}, found {}", other.describe())),
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn arity_error(pos: Pos, m: ArityMismatch) -> ParseError {
        ParseError::at(
            pos,
            ParseErrorKind::ArityConflict { symbol: m.symbol, expected: m.expected, found: m.found },
        )
    }

    // ---- terms -------------------------------------------------------------

    fn term(&mut self) -> PResult<Term> {
        let mut lhs = self.product()?;
        while *self.peek() == Tok::Plus {
            let pos = self.advance().pos;
            let rhs = self.product()?;
            self.sig.declare_function("+", 2).map_err(|m| Self::arity_error(pos, m))?;
            lhs = Term::app("+", vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> PResult<Term> {
        let mut lhs = self.term_atom()?;
        while *self.peek() == Tok::Star {
            let pos = self.advance().pos;
            let rhs = self.term_atom()?;
            self.sig.declare_function("*", 2).map_err(|m| Self::arity_error(pos, m))?;
            lhs = Term::app("*", vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn glued_paren(&self) -> bool {
        *self.peek() == Tok::LParen && self.peek_token().glued
    }

    fn term_atom(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::Zero => {
                let pos = self.advance().pos;
                self.sig.declare_function("0", 0).map_err(|m| Self::arity_error(pos, m))?;
                Ok(Term::zero())
            }
            Tok::LParen => {
                self.advance();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(name) => {
                let pos = self.advance().pos;
                if self.glued_paren() {
                    let args = self.term_args()?;
                    self.sig
                        .declare_function(&name, args.len())
                        .map_err(|m| Self::arity_error(pos, m))?;
                    Ok(Term::App(name, args))
                } else {
                    Ok(Term::Var(name))
                }
            }
            other => self.error(format!("expected a term, found {}", other.describe())),
        }
    }

    fn term_args(&mut self) -> PResult<Vec<Term>> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.eat(&Tok::RParen) {
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RParen)?;
            return Ok(args);
        }
    }

    // ---- formulas ----------------------------------------------------------

    fn formula(&mut self) -> PResult<Formula> {
        let lhs = self.implication()?;
        if self.eat(&Tok::Iff) {
            let rhs = self.implication()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> PResult<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let lhs = self.conjunction()?;
        if self.eat(&Tok::Or) {
            let rhs = self.disjunction()?;
            return Ok(Formula::or(lhs, rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let lhs = self.unary()?;
        if self.eat(&Tok::And) {
            let rhs = self.conjunction()?;
            return Ok(Formula::and(lhs, rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Not => {
                self.advance();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Forall | Tok::Exists => {
                let universal = self.advance().tok == Tok::Forall;
                let (x, _) = self.ident("a bound variable")?;
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(if universal { Formula::forall(x, body) } else { Formula::exists(x, body) })
            }
            _ => self.primary(),
        }
    }

    fn snapshot(&self) -> (usize, Signature) {
        (self.i, self.sig.clone())
    }

    fn restore(&mut self, snap: (usize, Signature)) {
        self.i = snap.0;
        self.sig = snap.1;
    }

    fn equation(&mut self) -> PResult<Formula> {
        let lhs = self.term()?;
        self.expect(Tok::Eq)?;
        let rhs = self.term()?;
        Ok(Formula::Equal(lhs, rhs))
    }

    fn continues_term(&self) -> bool {
        matches!(self.peek(), Tok::Eq | Tok::Plus | Tok::Star)
    }

    fn primary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Bot => {
                self.advance();
                Ok(Formula::Bottom)
            }
            Tok::LParen => {
                let snap = self.snapshot();
                self.advance();
                let grouped = self.formula().and_then(|f| self.expect(Tok::RParen).map(|_| f));
                match grouped {
                    Ok(f) if !self.continues_term() => Ok(f),
                    first => {
                        self.restore(snap);
                        match self.equation() {
                            Ok(eq) => Ok(eq),
                            Err(e) => Err(match first {
                                Err(f) => later(f, e),
                                Ok(_) => e,
                            }),
                        }
                    }
                }
            }
            Tok::Zero => self.equation(),
            Tok::Ident(name) => {
                let snap = self.snapshot();
                if let Ok(t) = self.term() {
                    if self.eat(&Tok::Eq) {
                        let rhs = self.term()?;
                        return Ok(Formula::Equal(t, rhs));
                    }
                }
                self.restore(snap);
                let pos = self.advance().pos;
                let args = if self.glued_paren() { self.term_args()? } else { Vec::new() };
                if self.continues_term() {
                    return self.error(format!("expected `=` after term {}", self.peek().describe()));
                }
                self.sig
                    .declare_predicate(&name, args.len())
                    .map_err(|m| Self::arity_error(pos, m))?;
                Ok(Formula::Atom(name, args))
            }
            other => self.error(format!("expected a formula, found {}", other.describe())),
        }
    }

    // ---- documents ---------------------------------------------------------

    fn document(&mut self) -> PResult<ProofDocument> {
        let mut doc = ProofDocument::default();
        let mut names: BTreeSet<String> = BTreeSet::new();
        let mut def_pos = Vec::new();
        loop {
            let kw = match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(kw) if kw == "def" || kw == "axiom" || kw == "lemma" => kw,
                other => {
                    return self.error(format!(
                        "expected `def`, `axiom` or `lemma`, found {}",
                        other.describe()
                    ))
                }
            };
            self.advance();
            let (name, pos) = self.ident("a name")?;
            if !names.insert(name.clone()) {
                return Err(ParseError::at(pos, ParseErrorKind::DuplicateName(name)));
            }
            match kw.as_str() {
                "def" => {
                    doc.definitions.push(self.definition(name, pos)?);
                    def_pos.push(pos);
                }
                "axiom" => {
                    self.expect(Tok::Colon)?;
                    let statement = self.formula()?;
                    doc.axioms.push(Axiom { name, statement, pos });
                }
                _ => doc.lemmas.push(self.lemma(name, pos)?),
            }
        }
        let defs: Definitions =
            doc.definitions.iter().map(|d| (d.name.clone(), d.clone())).collect();
        if let Some(bad) = find_cycle(&defs) {
            let i = doc.definitions.iter().position(|d| d.name == bad).unwrap_or(0);
            return Err(ParseError::syntax(
                def_pos[i],
                format!("definition `{bad}` depends on itself"),
            ));
        }
        doc.signature = std::mem::take(&mut self.sig);
        Ok(doc)
    }

    fn definition(&mut self, name: String, pos: Pos) -> PResult<Definition> {
        self.expect(Tok::LParen)?;
        let mut params: Vec<String> = Vec::new();
        if !self.eat(&Tok::RParen) {
            loop {
                let (p, ppos) = self.ident("a parameter")?;
                if params.contains(&p) {
                    return Err(ParseError::syntax(ppos, format!("repeated parameter `{p}`")));
                }
                params.push(p);
                if self.eat(&Tok::Comma) {
                    continue;
                }
                self.expect(Tok::RParen)?;
                break;
            }
        }
        self.sig
            .declare_predicate(&name, params.len())
            .map_err(|m| Self::arity_error(pos, m))?;
        self.expect(Tok::Assign)?;
        let body = self.formula()?;
        if let Some(stray) = body.free_vars().into_iter().find(|v| !params.contains(v)) {
            return Err(ParseError::syntax(
                pos,
                format!("free variable `{stray}` of `{name}` is not a parameter"),
            ));
        }
        Ok(Definition::new(name, params, body))
    }

    fn lemma(&mut self, name: String, pos: Pos) -> PResult<Lemma> {
        let mut hypotheses: Vec<(String, Formula)> = Vec::new();
        if self.eat(&Tok::LBrack) {
            loop {
                let (label, lpos) = self.ident("a hypothesis label")?;
                if hypotheses.iter().any(|(l, _)| *l == label) {
                    return Err(ParseError::at(lpos, ParseErrorKind::DuplicateName(label)));
                }
                self.expect(Tok::Colon)?;
                hypotheses.push((label, self.formula()?));
                if self.eat(&Tok::Comma) {
                    continue;
                }
                self.expect(Tok::RBrack)?;
                break;
            }
        }
        self.expect(Tok::Colon)?;
        let goal = self.formula()?;
        if !self.is_keyword("proof") {
            return self.error(format!("expected `proof`, found {}", self.peek().describe()));
        }
        self.advance();
        let root = self.node()?;
        Ok(Lemma { name, hypotheses, goal, root, pos })
    }

    fn node(&mut self) -> PResult<ProofNode> {
        let pos = self.expect(Tok::LParen)?;
        let (tag, tag_pos) = self.ident("a rule name")?;
        let rule = Rule::from_name(&tag)
            .ok_or_else(|| ParseError::syntax(tag_pos, format!("unknown rule `{tag}`")))?;
        let mut node = ProofNode::new(rule, Formula::Bottom, Vec::new());
        node.pos = pos;
        loop {
            match self.peek().clone() {
                Tok::Colon => break,
                Tok::LBrack => {
                    self.advance();
                    let (label, _) = self.ident("a discharge label")?;
                    self.expect(Tok::RBrack)?;
                    node.labels.push(label);
                }
                Tok::LBrace => {
                    let bpos = self.advance().pos;
                    let (x, _) = self.ident("a variable")?;
                    if self.eat(&Tok::RBrace) {
                        if node.eigenvariable.is_some() {
                            return Err(ParseError::syntax(bpos, "second eigenvariable"));
                        }
                        node.eigenvariable = Some(x);
                        continue;
                    }
                    let inst = self.instantiation(x, rule)?;
                    self.expect(Tok::RBrace)?;
                    node.instances.push(inst);
                }
                Tok::Ident(name) => {
                    let npos = self.advance().pos;
                    if node.reference.is_some() {
                        return Err(ParseError::syntax(npos, format!("unexpected name `{name}`")));
                    }
                    node.reference = Some(name);
                }
                other => {
                    return self.error(format!(
                        "expected an annotation or `:`, found {}",
                        other.describe()
                    ))
                }
            }
        }
        self.expect(Tok::Colon)?;
        node.conclusion = self.formula()?;
        if rule == Rule::Chain {
            node.steps = self.chain_steps()?;
        } else {
            while *self.peek() == Tok::LParen {
                node.children.push(self.node()?);
            }
        }
        self.expect(Tok::RParen)?;
        validate(&node)?;
        Ok(node)
    }

    fn instantiation(&mut self, target: String, rule: Rule) -> PResult<Instantiation> {
        if rule != Rule::Lemma {
            self.expect(Tok::Assign)?;
            return Ok(Instantiation::term(target, self.term()?));
        }
        if *self.peek() == Tok::LParen {
            self.advance();
            let mut params = Vec::new();
            if !self.eat(&Tok::RParen) {
                loop {
                    params.push(self.ident("a parameter")?.0);
                    if self.eat(&Tok::Comma) {
                        continue;
                    }
                    self.expect(Tok::RParen)?;
                    break;
                }
            }
            self.expect(Tok::Assign)?;
            return Ok(Instantiation::schema(target, params, self.formula()?));
        }
        self.expect(Tok::Assign)?;
        let snap = self.snapshot();
        if let Ok(t) = self.term() {
            if *self.peek() == Tok::RBrace {
                return Ok(Instantiation {
                    target,
                    params: None,
                    value: InstanceValue::Term(t),
                });
            }
        }
        self.restore(snap);
        Ok(Instantiation::formula(target, self.formula()?))
    }

    fn chain_steps(&mut self) -> PResult<Vec<ChainStep>> {
        let mut steps = Vec::new();
        loop {
            let pos = self.pos();
            let lhs = self.term()?;
            self.expect(Tok::Eq)?;
            let rhs = self.term()?;
            if !self.is_keyword("by") {
                return self.error(format!("expected `by`, found {}", self.peek().describe()));
            }
            self.advance();
            let (name, _) = self.ident("a justification")?;
            let justification = if name == "EqI" {
                Justification::Refl
            } else {
                let mut instances = Vec::new();
                while self.eat(&Tok::LBrace) {
                    let (x, _) = self.ident("a variable")?;
                    self.expect(Tok::Assign)?;
                    instances.push((x, self.term()?));
                    self.expect(Tok::RBrace)?;
                }
                Justification::Named { name, instances }
            };
            steps.push(ChainStep { lhs, rhs, justification, pos });
            if !self.eat(&Tok::Semi) {
                return Ok(steps);
            }
        }
    }
}

fn validate(node: &ProofNode) -> PResult<()> {
    let rule = node.rule;
    let fail = |msg: String| Err(ParseError::syntax(node.pos, msg));
    if node.labels.len() != rule.discharges() {
        return fail(format!(
            "{rule} takes {} discharge label(s), found {}",
            rule.discharges(),
            node.labels.len()
        ));
    }
    let wants_eigen = matches!(rule, Rule::AllI | Rule::ExE);
    if wants_eigen != node.eigenvariable.is_some() {
        return fail(if wants_eigen {
            format!("{rule} requires an eigenvariable `{{x0}}`")
        } else {
            format!("{rule} takes no eigenvariable")
        });
    }
    let wants_ref = matches!(rule, Rule::Hyp | Rule::Conv | Rule::Lemma);
    if wants_ref != node.reference.is_some() {
        return fail(if wants_ref {
            format!("{rule} requires a name")
        } else {
            format!("{rule} takes no name")
        });
    }
    match rule {
        Rule::AllE | Rule::ExI if node.instances.len() != 1 => {
            return fail(format!("{rule} requires exactly one substitution `{{x := t}}`"));
        }
        Rule::AllE | Rule::ExI | Rule::Lemma => {}
        _ if !node.instances.is_empty() => return fail(format!("{rule} takes no substitution")),
        _ => {}
    }
    if let Some(n) = rule.arity() {
        if node.children.len() != n {
            return fail(format!("{rule} requires {n} children, found {}", node.children.len()));
        }
    }
    Ok(())
}
