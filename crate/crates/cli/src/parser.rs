//! Recursive-descent parser for the model grammar.
//!
//! The grammar is line-oriented. Coordinates are declared first and fix
//! the bundle signature; every later declaration parses expressions
//! against it, so unknown names are positioned diagnostics, never silent
//! new symbols.
//!
//! ```text
//! base x t
//! field u v
//! set max_jet_order 4
//! lagrangian L = 1/2*(u[x]^2 + v[x]^2)
//! symmetry X = -v * d/du + u * d/dv
//! source S = u[x]*theta[u]
//! form P = u*theta[u; x]^dx
//! ```
//!
//! Expressions use the shared grammar: rationals `p/q`, `+ - * / ^`,
//! `sin( ) cos( ) exp( )`, jet variables `u[x,t]`, bare `u` for order 0.
//! Division is exact and requires a divisor that reduces to a nonzero
//! rational constant. In `form`/`source` right-hand sides `^` doubles as
//! the wedge separator when a differential factor follows; `dx`-style
//! names and `theta[u; x,...]` are the differential factors.

use num_bigint::BigInt;
use num_traits::Zero;

use jetvar_core::expr::Expression;
use jetvar_core::form::{Form, SourceForm, WedgeFactor};
use jetvar_core::jet::{BundleSignature, JetVariable, MultiIndex};
use jetvar_core::Rational;
use jetvar_core::VerticalField;

use crate::error::ParseError;
use crate::lexer::{tokenize, Token, TokenKind};
use crate::model::{Format, ModelFile, ModelOptions};

/// Names that cannot be coordinates: elementary functions, the contact
/// factor keyword, and the symmetry generator prefix.
const RESERVED: &[&str] = &[
    "sin",
    "cos",
    "exp",
    "theta",
    "d",
    "base",
    "field",
    "set",
    "lagrangian",
    "symmetry",
    "source",
    "form",
];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(source: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(source)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_kind(&self, ahead: usize) -> &TokenKind {
        let pos = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[pos].kind
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let token = self.peek();
        ParseError::new(token.line, token.col, message)
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, ParseError> {
        if self.peek().kind == kind {
            Ok(self.advance())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                kind.describe(),
                self.peek().kind.describe()
            )))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Ident(name) => {
                let token = self.advance();
                Ok((name, token.line, token.col))
            }
            other => Err(self.error_here(format!("expected {what}, found {}", other.describe()))),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek().kind == TokenKind::Newline {
            self.advance();
        }
    }

    fn end_of_line(&mut self) -> Result<(), ParseError> {
        match self.peek().kind {
            TokenKind::Newline => {
                self.advance();
                Ok(())
            }
            TokenKind::Eof => Ok(()),
            _ => Err(self.error_here(format!(
                "expected end of line, found {}",
                self.peek().kind.describe()
            ))),
        }
    }
}

/// Resolution context for names inside expressions.
struct Scope<'a> {
    sig: &'a BundleSignature,
}

impl Scope<'_> {
    fn resolve_jet(
        &self,
        parser: &mut Parser,
        name: &str,
        line: usize,
        col: usize,
    ) -> Result<Expression, ParseError> {
        if let Some(lambda) = self.sig.base_index(name) {
            if parser.peek().kind == TokenKind::LBracket {
                return Err(parser.error_here(format!(
                    "base coordinate `{name}` does not take derivative indices"
                )));
            }
            return Ok(Expression::base(lambda));
        }
        let Some(field) = self.sig.fiber_index(name) else {
            return Err(ParseError::new(
                line,
                col,
                format!("unknown coordinate `{name}`"),
            ));
        };
        let mut index = MultiIndex::empty(self.sig.base_len());
        if parser.peek().kind == TokenKind::LBracket {
            parser.advance();
            loop {
                let (base, bline, bcol) = parser.expect_ident("a base coordinate")?;
                let Some(lambda) = self.sig.base_index(&base) else {
                    return Err(ParseError::new(
                        bline,
                        bcol,
                        format!("unknown base coordinate `{base}`"),
                    ));
                };
                index = index.add(lambda).expect("index within signature");
                match parser.peek().kind {
                    TokenKind::Comma => {
                        parser.advance();
                    }
                    TokenKind::RBracket => break,
                    _ => {
                        return Err(parser.error_here(format!(
                            "expected `,` or `]`, found {}",
                            parser.peek().kind.describe()
                        )))
                    }
                }
            }
            parser.expect(TokenKind::RBracket)?;
        }
        Ok(Expression::jet(JetVariable::new(field, index)))
    }

    /// expr := term { (+|-) term }
    fn expression(&self, parser: &mut Parser) -> Result<Expression, ParseError> {
        let mut out = self.term(parser)?;
        loop {
            match parser.peek().kind {
                TokenKind::Plus => {
                    parser.advance();
                    let rhs = self.term(parser)?;
                    out = &out + &rhs;
                }
                TokenKind::Minus => {
                    parser.advance();
                    let rhs = self.term(parser)?;
                    out = &out - &rhs;
                }
                _ => return Ok(out),
            }
        }
    }

    /// term := factor { (*|/) factor }
    fn term(&self, parser: &mut Parser) -> Result<Expression, ParseError> {
        let mut out = self.factor(parser)?;
        loop {
            match parser.peek().kind {
                TokenKind::Star => {
                    parser.advance();
                    let rhs = self.factor(parser)?;
                    out = &out * &rhs;
                }
                TokenKind::Slash => {
                    let slash = parser.advance();
                    let rhs = self.factor(parser)?;
                    out = divide(&out, &rhs)
                        .map_err(|msg| ParseError::new(slash.line, slash.col, msg))?;
                }
                _ => return Ok(out),
            }
        }
    }

    /// factor := - factor | power
    fn factor(&self, parser: &mut Parser) -> Result<Expression, ParseError> {
        if parser.peek().kind == TokenKind::Minus {
            parser.advance();
            let inner = self.factor(parser)?;
            return Ok(-&inner);
        }
        self.power(parser)
    }

    /// power := primary [ ^ int ]
    fn power(&self, parser: &mut Parser) -> Result<Expression, ParseError> {
        let base = self.primary(parser)?;
        if parser.peek().kind == TokenKind::Caret {
            parser.advance();
            let exponent = parse_exponent(parser)?;
            return Ok(base.int_pow(exponent));
        }
        Ok(base)
    }

    fn primary(&self, parser: &mut Parser) -> Result<Expression, ParseError> {
        match parser.peek().kind.clone() {
            TokenKind::Int(digits) => {
                parser.advance();
                Ok(integer_literal(&digits))
            }
            TokenKind::LParen => {
                parser.advance();
                let inner = self.expression(parser)?;
                parser.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            TokenKind::Ident(name) => {
                if let Some(func) = jetvar_core::expr::ElemFunc::from_name(&name) {
                    let token = parser.advance();
                    if parser.peek().kind != TokenKind::LParen {
                        return Err(ParseError::new(
                            token.line,
                            token.col,
                            format!("`{name}` needs a parenthesized argument"),
                        ));
                    }
                    parser.advance();
                    let arg = self.expression(parser)?;
                    parser.expect(TokenKind::RParen)?;
                    return Ok(Expression::atom(func, arg));
                }
                let token = parser.advance();
                self.resolve_jet(parser, &name, token.line, token.col)
            }
            other => Err(self.unexpected(parser, &other)),
        }
    }

    fn unexpected(&self, parser: &Parser, kind: &TokenKind) -> ParseError {
        parser.error_here(format!(
            "expected a number, coordinate, `(` or `-`, found {}",
            kind.describe()
        ))
    }
}

fn integer_literal(digits: &str) -> Expression {
    let value: BigInt = digits.parse().expect("lexer emits valid digits");
    Expression::constant(Rational::from_integer(value))
}

fn parse_exponent(parser: &mut Parser) -> Result<u32, ParseError> {
    match parser.peek().kind.clone() {
        TokenKind::Int(digits) => {
            let token = parser.advance();
            digits.parse::<u32>().map_err(|_| {
                ParseError::new(token.line, token.col, "exponent too large".to_string())
            })
        }
        other => Err(parser.error_here(format!(
            "expected a non-negative integer exponent, found {}",
            other.describe()
        ))),
    }
}

/// Exact division: the divisor must reduce to a nonzero rational.
fn divide(lhs: &Expression, rhs: &Expression) -> Result<Expression, String> {
    match rhs.as_rational() {
        Some(q) if !q.is_zero() => Ok(lhs.scale(&(Rational::from_integer(BigInt::from(1)) / q))),
        Some(_) => Err("division by zero".to_string()),
        None => Err("division by a non-constant expression".to_string()),
    }
}

/// One parsed unit of a form term.
enum FormUnit {
    Scalar(Expression),
    Differential(WedgeFactor),
}

fn parse_form_unit(parser: &mut Parser, scope: &Scope<'_>) -> Result<FormUnit, ParseError> {
    if let TokenKind::Ident(name) = parser.peek().kind.clone() {
        if name == "theta" {
            parser.advance();
            parser.expect(TokenKind::LBracket)?;
            let (field_name, fline, fcol) = parser.expect_ident("a field name")?;
            let Some(field) = scope.sig.fiber_index(&field_name) else {
                return Err(ParseError::new(
                    fline,
                    fcol,
                    format!("unknown field `{field_name}`"),
                ));
            };
            let mut index = MultiIndex::empty(scope.sig.base_len());
            if parser.peek().kind == TokenKind::Semi {
                parser.advance();
                loop {
                    let (base, bline, bcol) = parser.expect_ident("a base coordinate")?;
                    let Some(lambda) = scope.sig.base_index(&base) else {
                        return Err(ParseError::new(
                            bline,
                            bcol,
                            format!("unknown base coordinate `{base}`"),
                        ));
                    };
                    index = index.add(lambda).expect("index within signature");
                    match parser.peek().kind {
                        TokenKind::Comma => {
                            parser.advance();
                        }
                        TokenKind::RBracket => break,
                        _ => {
                            return Err(parser.error_here(format!(
                                "expected `,` or `]`, found {}",
                                parser.peek().kind.describe()
                            )))
                        }
                    }
                }
            }
            parser.expect(TokenKind::RBracket)?;
            return Ok(FormUnit::Differential(WedgeFactor::Theta(
                JetVariable::new(field, index),
            )));
        }
        // d<base> differential
        if let Some(rest) = name.strip_prefix('d') {
            if let Some(lambda) = scope.sig.base_index(rest) {
                parser.advance();
                return Ok(FormUnit::Differential(WedgeFactor::Dx(lambda)));
            }
        }
    }
    // fall back to a scalar factor with optional integer power
    let base = scope.primary(parser)?;
    if parser.peek().kind == TokenKind::Caret {
        if let TokenKind::Int(_) = parser.peek_kind(1) {
            parser.advance();
            let exponent = parse_exponent(parser)?;
            return Ok(FormUnit::Scalar(base.int_pow(exponent)));
        }
        // a differential follows: leave the caret as the wedge separator
    }
    Ok(FormUnit::Scalar(base))
}

/// form_term := unit { (*|^|/) unit }, signs handled by the caller.
fn parse_form_term(parser: &mut Parser, scope: &Scope<'_>) -> Result<Form, ParseError> {
    let mut coefficient = Expression::one();
    let mut factors: Vec<WedgeFactor> = Vec::new();
    let mut negate = false;
    while parser.peek().kind == TokenKind::Minus {
        parser.advance();
        negate = !negate;
    }
    loop {
        let unit_was_differential = match parse_form_unit(parser, scope)? {
            FormUnit::Scalar(e) => {
                coefficient = &coefficient * &e;
                false
            }
            FormUnit::Differential(factor) => {
                factors.push(factor);
                true
            }
        };
        match parser.peek().kind {
            TokenKind::Star | TokenKind::Caret => {
                let separator = parser.advance();
                // `dx^2` asks for a power of a differential, not a wedge
                if separator.kind == TokenKind::Caret
                    && unit_was_differential
                    && matches!(parser.peek().kind, TokenKind::Int(_))
                {
                    return Err(ParseError::new(
                        separator.line,
                        separator.col,
                        "cannot raise a differential to a power".to_string(),
                    ));
                }
            }
            TokenKind::Slash => {
                let slash = parser.advance();
                match parse_form_unit(parser, scope)? {
                    FormUnit::Scalar(e) => {
                        coefficient = divide(&coefficient, &e)
                            .map_err(|msg| ParseError::new(slash.line, slash.col, msg))?;
                    }
                    FormUnit::Differential(_) => {
                        return Err(ParseError::new(
                            slash.line,
                            slash.col,
                            "cannot divide by a differential".to_string(),
                        ))
                    }
                }
            }
            _ => break,
        }
    }
    if negate {
        coefficient = -&coefficient;
    }
    Ok(Form::from_factors(coefficient, &factors))
}

fn parse_form_expr(parser: &mut Parser, scope: &Scope<'_>) -> Result<Form, ParseError> {
    let mut out = parse_form_term(parser, scope)?;
    loop {
        match parser.peek().kind {
            TokenKind::Plus => {
                parser.advance();
                let term = parse_form_term(parser, scope)?;
                out.add_assign(&term);
            }
            TokenKind::Minus => {
                // leave the sign for the term parser
                let term = parse_form_term(parser, scope)?;
                out.add_assign(&term);
            }
            _ => return Ok(out),
        }
    }
}

/// symmetry := sum of `coeff * d/d<field>` terms, at most one generator
/// per term, coefficient optional.
fn parse_symmetry(parser: &mut Parser, scope: &Scope<'_>) -> Result<VerticalField, ParseError> {
    let mut field = VerticalField::zero();
    loop {
        let mut negate = false;
        while parser.peek().kind == TokenKind::Minus {
            parser.advance();
            negate = !negate;
        }
        let mut coefficient = Expression::one();
        let mut generator: Option<usize> = None;
        loop {
            // generator lookahead: `d` `/` `d<field>`
            if let TokenKind::Ident(name) = &parser.peek().kind {
                if name == "d" && *parser.peek_kind(1) == TokenKind::Slash {
                    if let TokenKind::Ident(gen) = parser.peek_kind(2).clone() {
                        let token = parser.advance(); // d
                        parser.advance(); // /
                        let gen_token = parser.advance();
                        let Some(rest) = gen.strip_prefix('d') else {
                            return Err(ParseError::new(
                                gen_token.line,
                                gen_token.col,
                                format!("expected `d<field>` after `d/`, found `{gen}`"),
                            ));
                        };
                        let Some(fiber) = scope.sig.fiber_index(rest) else {
                            return Err(ParseError::new(
                                gen_token.line,
                                gen_token.col,
                                format!("unknown field `{rest}` in generator"),
                            ));
                        };
                        if generator.replace(fiber).is_some() {
                            return Err(ParseError::new(
                                token.line,
                                token.col,
                                "more than one d/d<field> generator in a symmetry term".to_string(),
                            ));
                        }
                        match parser.peek().kind {
                            TokenKind::Star => {
                                parser.advance();
                                continue;
                            }
                            _ => break,
                        }
                    }
                }
            }
            let factor = scope.power(parser)?;
            coefficient = &coefficient * &factor;
            match parser.peek().kind {
                TokenKind::Star => {
                    parser.advance();
                }
                TokenKind::Slash => {
                    let slash = parser.advance();
                    let rhs = scope.power(parser)?;
                    coefficient = divide(&coefficient, &rhs)
                        .map_err(|msg| ParseError::new(slash.line, slash.col, msg))?;
                }
                _ => break,
            }
        }
        let Some(fiber) = generator else {
            return Err(
                parser.error_here("symmetry term needs a `d/d<field>` generator".to_string())
            );
        };
        if negate {
            coefficient = -&coefficient;
        }
        let mut component = field.component(fiber);
        component.add_assign(&coefficient);
        field.set_component(fiber, component);

        match parser.peek().kind {
            TokenKind::Plus => {
                parser.advance();
            }
            TokenKind::Minus => {} // sign consumed by the next term
            _ => return Ok(field),
        }
    }
}

/// Validates a parsed form as a source form: every term must be
/// `expr * theta[field]` with an order-0 contact factor and no `dx`.
fn as_source_form(form: &Form, line: usize, col: usize) -> Result<SourceForm, ParseError> {
    let mut out = SourceForm::zero();
    for (monomial, coeff) in form.terms() {
        let ok = monomial.horizontal_degree() == 0
            && monomial.contact_degree() == 1
            && monomial.thetas()[0].order() == 0;
        if !ok {
            return Err(ParseError::new(
                line,
                col,
                "source terms must have the shape expr*theta[field]".to_string(),
            ));
        }
        let field = monomial.thetas()[0].field;
        let mut component = out.component(field);
        component.add_assign(coeff);
        out.set_component(field, component);
    }
    Ok(out)
}

/// Parses a complete model file.
pub fn parse_model(source: &str) -> Result<ModelFile, ParseError> {
    let mut parser = Parser::new(source)?;
    let mut base_names: Vec<(String, usize, usize)> = Vec::new();
    let mut fiber_names: Vec<(String, usize, usize)> = Vec::new();
    let mut signature: Option<BundleSignature> = None;
    let mut lagrangians: Vec<(String, Expression)> = Vec::new();
    let mut symmetries: Vec<(String, VerticalField)> = Vec::new();
    let mut sources: Vec<(String, SourceForm)> = Vec::new();
    let mut forms: Vec<(String, Form)> = Vec::new();
    let mut options = ModelOptions::default();

    loop {
        parser.skip_newlines();
        if parser.peek().kind == TokenKind::Eof {
            break;
        }
        let (keyword, kline, kcol) = parser.expect_ident("a declaration keyword")?;
        match keyword.as_str() {
            "base" | "field" => {
                if signature.is_some() {
                    return Err(ParseError::new(
                        kline,
                        kcol,
                        "coordinates must be declared before any other declaration".to_string(),
                    ));
                }
                let into = if keyword == "base" {
                    &mut base_names
                } else {
                    &mut fiber_names
                };
                loop {
                    let (name, nline, ncol) = parser.expect_ident("a coordinate name")?;
                    into.push((name, nline, ncol));
                    if matches!(parser.peek().kind, TokenKind::Newline | TokenKind::Eof) {
                        break;
                    }
                }
                parser.end_of_line()?;
            }
            "set" => {
                let (option, oline, ocol) = parser.expect_ident("an option name")?;
                match option.as_str() {
                    "max_jet_order" | "max_poly_degree" => {
                        let token = parser.peek().clone();
                        let TokenKind::Int(digits) = token.kind else {
                            return Err(parser.error_here("expected a non-negative integer"));
                        };
                        parser.advance();
                        let value: u32 = digits.parse().map_err(|_| {
                            ParseError::new(token.line, token.col, "value too large".to_string())
                        })?;
                        if option == "max_jet_order" {
                            options.max_jet_order = Some(value);
                        } else {
                            options.max_poly_degree = Some(value);
                        }
                    }
                    "output" => {
                        let (value, vline, vcol) = parser.expect_ident("an output format")?;
                        options.output = Some(
                            value
                                .parse::<Format>()
                                .map_err(|msg| ParseError::new(vline, vcol, msg))?,
                        );
                    }
                    _ => {
                        return Err(ParseError::new(
                            oline,
                            ocol,
                            format!("unknown option `{option}`"),
                        ))
                    }
                }
                parser.end_of_line()?;
            }
            "lagrangian" | "symmetry" | "source" | "form" => {
                let sig = match &signature {
                    Some(sig) => sig,
                    None => {
                        let built = build_signature(&base_names, &fiber_names, kline, kcol)?;
                        signature = Some(built);
                        signature.as_ref().unwrap()
                    }
                };
                let (name, nline, ncol) = parser.expect_ident("a declaration name")?;
                let taken = lagrangians.iter().any(|(n, _)| *n == name)
                    || symmetries.iter().any(|(n, _)| *n == name)
                    || sources.iter().any(|(n, _)| *n == name)
                    || forms.iter().any(|(n, _)| *n == name);
                if taken {
                    return Err(ParseError::new(
                        nline,
                        ncol,
                        format!("duplicate declaration name `{name}`"),
                    ));
                }
                parser.expect(TokenKind::Equals)?;
                let scope = Scope { sig };
                match keyword.as_str() {
                    "lagrangian" => {
                        let density = scope.expression(&mut parser)?;
                        lagrangians.push((name, density));
                    }
                    "symmetry" => {
                        let field = parse_symmetry(&mut parser, &scope)?;
                        symmetries.push((name, field));
                    }
                    "source" => {
                        let rhs_pos = (parser.peek().line, parser.peek().col);
                        let form = parse_form_expr(&mut parser, &scope)?;
                        let source = as_source_form(&form, rhs_pos.0, rhs_pos.1)?;
                        sources.push((name, source));
                    }
                    "form" => {
                        let form = parse_form_expr(&mut parser, &scope)?;
                        forms.push((name, form));
                    }
                    _ => unreachable!(),
                }
                parser.end_of_line()?;
            }
            other => {
                return Err(ParseError::new(
                    kline,
                    kcol,
                    format!(
                        "expected `base`, `field`, `set`, `lagrangian`, `symmetry`, \
                         `source` or `form`, found `{other}`"
                    ),
                ));
            }
        }
    }

    let signature = match signature {
        Some(sig) => sig,
        None => build_signature(&base_names, &fiber_names, 1, 1)?,
    };
    Ok(ModelFile {
        signature,
        lagrangians,
        symmetries,
        sources,
        forms,
        options,
    })
}

fn build_signature(
    base_names: &[(String, usize, usize)],
    fiber_names: &[(String, usize, usize)],
    line: usize,
    col: usize,
) -> Result<BundleSignature, ParseError> {
    if base_names.is_empty() {
        return Err(ParseError::new(
            line,
            col,
            "no base coordinates declared".to_string(),
        ));
    }
    if fiber_names.is_empty() {
        return Err(ParseError::new(
            line,
            col,
            "no field coordinates declared".to_string(),
        ));
    }
    for (name, nline, ncol) in base_names.iter().chain(fiber_names.iter()) {
        if RESERVED.contains(&name.as_str()) {
            return Err(ParseError::new(
                *nline,
                *ncol,
                format!("`{name}` is reserved and cannot be a coordinate"),
            ));
        }
        // `d<base>` must stay unambiguous in form expressions
        if let Some(rest) = name.strip_prefix('d') {
            if base_names.iter().any(|(b, _, _)| b == rest) {
                return Err(ParseError::new(
                    *nline,
                    *ncol,
                    format!("`{name}` collides with the differential of base `{rest}`"),
                ));
            }
        }
    }
    let base: Vec<&str> = base_names.iter().map(|(n, _, _)| n.as_str()).collect();
    let fiber: Vec<&str> = fiber_names.iter().map(|(n, _, _)| n.as_str()).collect();
    BundleSignature::new(&base, &fiber).map_err(|err| {
        let (_, nline, ncol) = base_names
            .iter()
            .chain(fiber_names.iter())
            .next()
            .expect("nonempty");
        ParseError::new(*nline, *ncol, err.to_string())
    })
}

/// Parses a standalone expression against a signature (round-trip tests
/// and future tooling).
pub fn parse_expression(source: &str, sig: &BundleSignature) -> Result<Expression, ParseError> {
    let mut parser = Parser::new(source)?;
    let scope = Scope { sig };
    parser.skip_newlines();
    let out = scope.expression(&mut parser)?;
    parser.skip_newlines();
    if parser.peek().kind != TokenKind::Eof {
        return Err(parser.error_here(format!(
            "unexpected {} after expression",
            parser.peek().kind.describe()
        )));
    }
    Ok(out)
}

/// Parses a standalone form expression against a signature.
pub fn parse_form(source: &str, sig: &BundleSignature) -> Result<Form, ParseError> {
    let mut parser = Parser::new(source)?;
    let scope = Scope { sig };
    parser.skip_newlines();
    let out = parse_form_expr(&mut parser, &scope)?;
    parser.skip_newlines();
    if parser.peek().kind != TokenKind::Eof {
        return Err(parser.error_here(format!(
            "unexpected {} after form",
            parser.peek().kind.describe()
        )));
    }
    Ok(out)
}
