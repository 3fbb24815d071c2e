//! Recursive-descent parser for the expression language.
//!
//! Element grammar: monomials `x(a1,...,an)` with `x1`..`x9` sugar, scalar
//! literals (integers, `q`, `q^k`, parenthesized Laurent expressions with
//! `+ - * / ^`), products `*`, sums `+`, and powers `^` (repeated
//! multiplication).
//!
//! Operator grammar: primitives `s<i>`, `s<i>^k`, `d<i>`, `th(c1,...,cn)`,
//! `mul x(...)`, the named composites `e<i>`, `f<i>`, `K<i>`, `k<i>`,
//! `E(i,j)`, the identity `id`, composition `;` (left-to-right in
//! application order: `d1; s1` applies `d1` first), sums `+`, scalar
//! prefixes, and integer powers.
//!
//! Errors carry a 1-based column.

use qdpa::galg::{AlgebraKind, Element};
use qdpa::lattice::MultiIndex;
use qdpa::ops::{OpExpr, PrimOp};
use qdpa::qarith::{Scalar, ScalarField};
use qdpa::weyl::WeylVariant;

/// Session context every expression is validated against.
#[derive(Debug, Clone, Copy)]
pub struct Session {
    pub n: usize,
    pub field: ScalarField,
    pub kind: AlgebraKind,
    pub variant: WeylVariant,
}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub message: String,
    /// 1-based column in the input.
    pub column: usize,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "syntax error at column {}: {}", self.column, self.message)
    }
}

type PResult<T> = Result<T, ParseError>;

/// A parsed element-context value: scalars lift to multiples of the unit.
#[derive(Debug, Clone)]
enum Value {
    Scalar(Scalar),
    Element(Element),
}

impl Value {
    fn into_element(self, s: &Session) -> Element {
        match self {
            Value::Element(e) => e,
            Value::Scalar(c) => Element::unit(s.kind, s.n, s.field).scale(&c),
        }
    }
}

pub struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    session: Session,
}

impl<'a> Parser<'a> {
    pub fn new(input: &'a str, session: Session) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
            session,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            message: message.into(),
            column: self.pos + 1,
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat(b'-');
        let digits_start = self.pos;
        while self
            .input
            .get(self.pos)
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.input[digits_start..self.pos]).unwrap();
        let v: i64 = text
            .parse()
            .map_err(|_| ParseError {
                message: "integer out of range".into(),
                column: start + 1,
            })?;
        Ok(if neg { -v } else { v })
    }

    /// `(a1,...,ak)`.
    fn int_tuple(&mut self) -> PResult<Vec<i64>> {
        self.expect(b'(')?;
        let mut out = Vec::new();
        loop {
            out.push(self.integer()?);
            if self.eat(b',') {
                continue;
            }
            self.expect(b')')?;
            return Ok(out);
        }
    }

    fn multi_index(&mut self) -> PResult<MultiIndex> {
        let v = self.int_tuple()?;
        if v.len() != self.session.n {
            return self.err(format!(
                "expected {} components, found {}",
                self.session.n,
                v.len()
            ));
        }
        Ok(MultiIndex::new(v))
    }

    // -- scalar sub-grammar ------------------------------------------------

    fn scalar_expr(&mut self) -> PResult<Scalar> {
        let mut acc = self.scalar_term()?;
        loop {
            if self.eat(b'+') {
                let t = self.scalar_term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.scalar_term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_term(&mut self) -> PResult<Scalar> {
        let mut acc = self.scalar_factor()?;
        loop {
            if self.eat(b'*') {
                let t = self.scalar_factor()?;
                acc = &acc * &t;
            } else if self.eat(b'/') {
                let t = self.scalar_factor()?;
                if t.is_zero() {
                    return self.err("division by zero");
                }
                acc = &acc / &t;
            } else if matches!(self.peek(), Some(b'q') | Some(b'(')) {
                // juxtaposition, e.g. `2q^3`
                let t = self.scalar_factor()?;
                acc = &acc * &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_factor(&mut self) -> PResult<Scalar> {
        let base = self.scalar_atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            if base.is_zero() && e < 0 {
                return self.err("zero to a negative power");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn scalar_atom(&mut self) -> PResult<Scalar> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                if self.eat(b'^') {
                    let e = self.integer()?;
                    Ok(self.session.field.q_power(e))
                } else {
                    Ok(self.session.field.q())
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let s = self.scalar_expr()?;
                self.expect(b')')?;
                Ok(s)
            }
            Some(b'-') => {
                self.pos += 1;
                let s = self.scalar_atom()?;
                Ok(-&s)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(self.session.field.from_int(v))
            }
            _ => self.err("expected a scalar"),
        }
    }

    // -- element grammar ---------------------------------------------------

    pub fn element(&mut self) -> PResult<Element> {
        let v = self.value_expr()?;
        self.skip_ws();
        if !self.at_end() {
            return self.err("unexpected trailing input");
        }
        Ok(v.into_element(&self.session))
    }

    fn value_expr(&mut self) -> PResult<Value> {
        let mut acc = self.value_term()?;
        while self.eat(b'+') {
            let t = self.value_term()?;
            acc = match (acc, t) {
                (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
                (a, b) => Value::Element(
                    a.into_element(&self.session)
                        .add(&b.into_element(&self.session)),
                ),
            };
        }
        Ok(acc)
    }

    fn value_term(&mut self) -> PResult<Value> {
        let mut acc = self.value_factor()?;
        loop {
            if self.eat(b'*') {
                let t = self.value_factor()?;
                acc = mul_values(acc, t, &self.session);
            } else if matches!(self.peek(), Some(b'x')) {
                // juxtaposition: `2 x(1,0)` or `(q+1) x1`
                let t = self.value_factor()?;
                acc = mul_values(acc, t, &self.session);
            } else {
                return Ok(acc);
            }
        }
    }

    fn value_factor(&mut self) -> PResult<Value> {
        let base = self.value_atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            return match base {
                Value::Scalar(s) => {
                    if s.is_zero() && e < 0 {
                        self.err("zero to a negative power")
                    } else {
                        Ok(Value::Scalar(s.pow(e)))
                    }
                }
                Value::Element(el) => {
                    if e < 0 {
                        self.err("elements only take nonnegative powers")
                    } else {
                        Ok(Value::Element(el.pow(e as u32)))
                    }
                }
            };
        }
        Ok(base)
    }

    fn value_atom(&mut self) -> PResult<Value> {
        match self.peek() {
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                match self.input.get(self.pos) {
                    Some(b'(') => {
                        let alpha = self.multi_index()?;
                        let el = Element::monomial(self.session.kind, alpha, self.session.field)
                            .map_err(|e| ParseError {
                                message: e.to_string(),
                                column: start + 1,
                            })?;
                        Ok(Value::Element(el))
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let i = (c - b'0') as usize;
                        self.pos += 1;
                        if i == 0 || i > self.session.n {
                            self.pos = start;
                            return self.err(format!(
                                "x{i} is out of range for dimension {}",
                                self.session.n
                            ));
                        }
                        let el =
                            Element::generator(self.session.kind, self.session.n, i, self.session.field)
                                .map_err(|e| ParseError {
                                    message: e.to_string(),
                                    column: start + 1,
                                })?;
                        Ok(Value::Element(el))
                    }
                    _ => {
                        self.pos = start;
                        self.err("expected `x(` or `x<i>`")
                    }
                }
            }
            Some(b'(') => {
                // a parenthesized value (scalar or element)
                let save = self.pos;
                self.pos += 1;
                let inner = self.value_expr()?;
                self.expect(b')').map_err(|e| ParseError {
                    message: e.message,
                    column: save + 1,
                })?;
                Ok(inner)
            }
            _ => Ok(Value::Scalar(self.scalar_atom()?)),
        }
    }

    // -- operator grammar ----------------------------------------------------

    pub fn operator(&mut self) -> PResult<OpExpr> {
        let op = self.op_expr()?;
        self.skip_ws();
        if !self.at_end() {
            return self.err("unexpected trailing input");
        }
        op.validate(self.session.n, self.session.kind)
            .map_err(|e| ParseError {
                message: e.to_string(),
                column: 1,
            })?;
        Ok(op)
    }

    fn op_expr(&mut self) -> PResult<OpExpr> {
        let mut terms = vec![self.op_chain()?];
        while self.eat(b'+') {
            terms.push(self.op_chain()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            OpExpr::sum(terms)
        })
    }

    /// `a; b; c` applies `a` first.
    fn op_chain(&mut self) -> PResult<OpExpr> {
        let mut acc = self.op_prefixed()?;
        while self.eat(b';') {
            let next = self.op_prefixed()?;
            acc = OpExpr::compose(next, acc);
        }
        Ok(acc)
    }

    fn op_prefixed(&mut self) -> PResult<OpExpr> {
        // optional scalar prefix: scalar '*' follows, or a bare
        // scalar-looking token that cannot start an operator atom
        let save = self.pos;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'-' || c == b'q' || c == b'(')
        {
            // try scalar; `(` could open a parenthesized operator instead
            match self.scalar_factor() {
                Ok(c) => {
                    if self.eat(b'*') {
                        let inner = self.op_powered()?;
                        return Ok(OpExpr::scale(c, inner));
                    }
                    // bare scalar: a scalar multiple of the identity
                    return Ok(OpExpr::scale(c, OpExpr::Identity));
                }
                Err(_) => self.pos = save,
            }
        }
        self.op_powered()
    }

    fn op_powered(&mut self) -> PResult<OpExpr> {
        let (base, inverse) = self.op_atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            return self.power_op(base, inverse, e);
        }
        Ok(base)
    }

    fn power_op(&mut self, base: OpExpr, inverse: Option<OpExpr>, e: i64) -> PResult<OpExpr> {
        let (op, e) = if e < 0 {
            let Some(inv) = inverse else {
                return self.err("this operator does not take negative powers");
            };
            (inv, -e)
        } else {
            (base, e)
        };
        let mut acc = OpExpr::Identity;
        for _ in 0..e {
            acc = OpExpr::compose(op.clone(), acc);
        }
        Ok(acc)
    }

    /// Returns the operator and, when it is invertible, its inverse (for
    /// negative powers).
    fn op_atom(&mut self) -> PResult<(OpExpr, Option<OpExpr>)> {
        self.skip_ws();
        let start = self.pos;
        let n = self.session.n;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.op_expr()?;
                self.expect(b')')?;
                Ok((inner, None))
            }
            Some(b's') => {
                self.pos += 1;
                let i = self.axis()?;
                Ok((
                    OpExpr::prim(PrimOp::sigma(i)),
                    Some(OpExpr::prim(PrimOp::sigma_inv(i))),
                ))
            }
            Some(b'd') => {
                self.pos += 1;
                let i = self.axis()?;
                Ok((OpExpr::prim(PrimOp::del(i)), None))
            }
            Some(b't') => {
                if self.input[self.pos..].starts_with(b"th") {
                    self.pos += 2;
                    let a = self.multi_index()?;
                    let inv = OpExpr::prim(PrimOp::Theta(-&a));
                    Ok((OpExpr::prim(PrimOp::Theta(a)), Some(inv)))
                } else {
                    self.err("unknown operator")
                }
            }
            Some(b'm') => {
                if self.input[self.pos..].starts_with(b"mul") {
                    self.pos += 3;
                    self.skip_ws();
                    if self.peek() != Some(b'x') {
                        return self.err("expected a monomial after `mul`");
                    }
                    let v = self.value_atom()?;
                    match v {
                        Value::Element(el) => {
                            let mut terms = Vec::new();
                            for (alpha, c) in el.terms() {
                                terms.push(OpExpr::scale(
                                    c.clone(),
                                    OpExpr::prim(PrimOp::MulBy(alpha.clone())),
                                ));
                            }
                            Ok((OpExpr::sum(terms), None))
                        }
                        Value::Scalar(_) => self.err("expected a monomial after `mul`"),
                    }
                } else {
                    self.err("unknown operator")
                }
            }
            Some(b'e') => {
                self.pos += 1;
                let i = self.simple_axis()?;
                let r = self.realization()?;
                Ok((r.e(i), None))
            }
            Some(b'f') => {
                self.pos += 1;
                let i = self.simple_axis()?;
                let r = self.realization()?;
                Ok((r.f(i), None))
            }
            Some(b'K') => {
                self.pos += 1;
                let i = self.simple_axis()?;
                let r = self.realization()?;
                Ok((r.k(i), Some(r.k_inv(i))))
            }
            Some(b'k') => {
                self.pos += 1;
                let i = self.axis()?;
                Ok((
                    OpExpr::prim(PrimOp::sigma(i)),
                    Some(OpExpr::prim(PrimOp::sigma_inv(i))),
                ))
            }
            Some(b'E') => {
                self.pos += 1;
                let pair = self.int_tuple_at(start)?;
                if pair.len() != 2 {
                    return self.err("E(i,j) takes two axes");
                }
                let (i, j) = (pair[0], pair[1]);
                if i < 1 || j < 1 || i as usize > n || j as usize > n {
                    return self.err(format!("axes out of range for dimension {n}"));
                }
                Ok((
                    OpExpr::word(&[PrimOp::x(n, i as usize), PrimOp::del(j as usize)]),
                    None,
                ))
            }
            Some(b'i') => {
                if self.input[self.pos..].starts_with(b"id") {
                    self.pos += 2;
                    Ok((OpExpr::Identity, Some(OpExpr::Identity)))
                } else {
                    self.err("unknown operator")
                }
            }
            _ => self.err("expected an operator"),
        }
    }

    fn int_tuple_at(&mut self, _start: usize) -> PResult<Vec<i64>> {
        self.int_tuple()
    }

    fn axis(&mut self) -> PResult<usize> {
        let i = self.integer()?;
        if i < 1 || i as usize > self.session.n {
            return self.err(format!(
                "axis {i} out of range for dimension {}",
                self.session.n
            ));
        }
        Ok(i as usize)
    }

    fn simple_axis(&mut self) -> PResult<usize> {
        let i = self.integer()?;
        if i < 1 || i as usize >= self.session.n {
            return self.err(format!(
                "simple-root index {i} out of range for dimension {}",
                self.session.n
            ));
        }
        Ok(i as usize)
    }

    fn realization(&mut self) -> PResult<qdpa::uq::UqRealization> {
        qdpa::uq::UqRealization::new(self.session.n, self.session.kind, self.session.field)
            .map_err(|e| ParseError {
                message: e.to_string(),
                column: self.pos,
            })
    }
}

/// Parse an element expression.
pub fn parse_element(input: &str, session: &Session) -> PResult<Element> {
    Parser::new(input, *session).element()
}

/// Parse an operator expression.
pub fn parse_operator(input: &str, session: &Session) -> PResult<OpExpr> {
    Parser::new(input, *session).operator()
}

fn mul_values(a: Value, b: Value, _s: &Session) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(x), Value::Element(e)) | (Value::Element(e), Value::Scalar(x)) => {
            Value::Element(e.scale(&x))
        }
        (Value::Element(x), Value::Element(y)) => Value::Element(x.mul(&y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qdpa::qarith::qint;

    fn session() -> Session {
        Session {
            n: 2,
            field: ScalarField::Generic,
            kind: AlgebraKind::DividedPower,
            variant: WeylVariant::Plus,
        }
    }

    #[test]
    fn elements_parse() {
        let s = session();
        let e = parse_element("x(1,0) * x(1,0)", &s).unwrap();
        let x1 = Element::generator(s.kind, 2, 1, s.field).unwrap();
        assert_eq!(e, x1.mul(&x1));
        assert_eq!(e.coeff(&MultiIndex::new(vec![2, 0])), qint(2, &s.field));
        // sugar, powers, scalar prefixes
        assert_eq!(parse_element("x1^2", &s).unwrap(), e);
        let e2 = parse_element("(q + q^-1)*x(2,0)", &s).unwrap();
        assert_eq!(e2, e);
        assert_eq!(parse_element("q^2 + 1 + q^-2", &s).unwrap(), {
            Element::unit(s.kind, 2, s.field).scale(&qint(3, &s.field))
        });
    }

    #[test]
    fn syntax_error_positions() {
        let s = session();
        let err = parse_element("x(1,", &s).unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse_element("x(1,0,0)", &s).is_err());
        assert!(parse_element("x3", &s).is_err());
        assert!(parse_element("y", &s).is_err());
    }

    #[test]
    fn operators_parse() {
        let s = session();
        let op = parse_operator("d1; s1", &s).unwrap();
        // apply d1 first
        let x = parse_element("x(1,1)", &s).unwrap();
        let d1 = OpExpr::prim(PrimOp::del(1));
        let s1 = OpExpr::prim(PrimOp::sigma(1));
        assert_eq!(op.apply(&x), s1.apply(&d1.apply(&x)));
        // named generators
        let e1 = parse_operator("e1", &s).unwrap();
        let got = e1.apply(&parse_element("x(1,2)", &s).unwrap());
        let expect = parse_element("(q + q^-1) x(2,1)", &s).unwrap();
        assert_eq!(got, expect);
        // sums and scalar prefixes
        let op = parse_operator("q*(d1; mul x(1,0)) + s1^-1", &s).unwrap();
        let _ = op;
        assert!(parse_operator("d3", &s).is_err());
        assert!(parse_operator("bogus", &s).is_err());
    }

    #[test]
    fn exterior_rejects_derivatives() {
        let s = Session {
            kind: AlgebraKind::Exterior,
            ..session()
        };
        assert!(parse_operator("d1", &s).is_err());
        assert!(parse_operator("s1", &s).is_ok());
    }
}
