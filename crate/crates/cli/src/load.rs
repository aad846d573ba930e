//! File loading with the file name in every error.

use std::fs;

use anyhow::Context;
use obstrukt::cohomodel::json::{parse_bundle, parse_lift, parse_manifold};
use obstrukt::{Bundle, Element, Int, Manifold};

fn read(path: &str) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
}

pub fn manifold(path: &str) -> anyhow::Result<Manifold> {
    parse_manifold::<Int>(&read(path)?).with_context(|| format!("in {path}"))
}

pub fn bundle(m: &Manifold, path: &str) -> anyhow::Result<Bundle> {
    parse_bundle(m, &read(path)?).with_context(|| format!("in {path}"))
}

/// A lift file: bare array or `{"l": [...]}`.
pub fn lift(m: &Manifold, path: &str) -> anyhow::Result<Element> {
    let coords = parse_lift::<Int>(&read(path)?).with_context(|| format!("in {path}"))?;
    m.class(2, coords).with_context(|| format!("in {path}"))
}

/// An inline class such as `[1, 0]`, or a path to a file holding one.
pub fn class(m: &Manifold, degree: usize, text: &str, flag: &str) -> anyhow::Result<Element> {
    let body = if text.trim_start().starts_with('[') { text.to_string() } else { read(text)? };
    let coords = parse_lift::<Int>(&body).with_context(|| format!("in --{flag}"))?;
    m.class(degree, coords).with_context(|| format!("in --{flag}"))
}
