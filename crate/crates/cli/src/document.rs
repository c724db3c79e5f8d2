//! Versioned body documents.

use serde::{Deserialize, Serialize};
use spherewidth::{BodyData, BodySpec, ConvexBody, GeometryError};
use thiserror::Error;

use crate::format::{to_json, DOCUMENT_DIGITS};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Metadata {
    fn is_empty(&self) -> bool {
        self.label.is_none() && self.seed.is_none()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Content {
    Spec(BodySpec),
    Body(BodyData),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BodyDocument {
    pub content: Content,
    pub metadata: Metadata,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spec: Option<BodySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    body: Option<BodyData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error("document needs exactly one of \"spec\" and \"body\"")]
    Content,
}

impl BodyDocument {
    pub fn from_spec(spec: BodySpec) -> Self {
        BodyDocument { content: Content::Spec(spec), metadata: Metadata::default() }
    }

    pub fn from_body(body: &ConvexBody) -> Self {
        BodyDocument { content: Content::Body(body.to_data()), metadata: Metadata::default() }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let text = text.strip_prefix('\u{feff}').unwrap_or(text);
        let raw: Raw = serde_json::from_str(text)?;
        if raw.version != VERSION {
            return Err(DocumentError::Version(raw.version));
        }
        let content = match (raw.spec, raw.body) {
            (Some(s), None) => Content::Spec(s),
            (None, Some(b)) => Content::Body(b),
            _ => return Err(DocumentError::Content),
        };
        Ok(BodyDocument { content, metadata: raw.metadata.unwrap_or_default() })
    }

    pub fn to_json(&self) -> String {
        let (spec, body) = match &self.content {
            Content::Spec(s) => (Some(*s), None),
            Content::Body(b) => (None, Some(b.clone())),
        };
        let metadata = (!self.metadata.is_empty()).then(|| self.metadata.clone());
        to_json(&Raw { version: VERSION, spec, body, metadata }, DOCUMENT_DIGITS)
    }

    pub fn build(&self) -> Result<ConvexBody, GeometryError> {
        match &self.content {
            Content::Spec(s) => s.build(),
            Content::Body(b) => ConvexBody::from_data(b),
        }
    }
}
