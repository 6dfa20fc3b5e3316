"""Uploaded learning material: decoding, section index, serialization.

Only UTF-8 text uploads are accepted (plain text or markdown); richer media
is out of scope. Section ranges are byte offsets into the UTF-8 encoding of
the body so they stay valid for any consumer that slices bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import SrlTutorError

PLAIN = "plain"
MARKDOWN = "markdown"
FORMATS = (PLAIN, MARKDOWN)

MATERIAL_FORMAT = "material-document"
MATERIAL_VERSION = 1

_EXTENSIONS = {".txt": PLAIN, ".text": PLAIN, ".md": MARKDOWN, ".markdown": MARKDOWN}

_HEADING = re.compile(r"^(#{1,6})[ \t]+(\S.*?)\s*$")


class EncodingError(SrlTutorError):
    pass


class EmptyDocument(SrlTutorError):
    pass


class UnsupportedFormat(SrlTutorError):
    pass


class BadMaterialDocument(SrlTutorError):
    pass


@dataclass(frozen=True)
class Section:
    """heading is "" for the implicit section of heading-less content."""

    heading: str
    depth: int
    start: int
    end: int


@dataclass(frozen=True)
class MaterialDocument:
    id: str
    title: str
    body: str
    format: str
    sections: tuple[Section, ...]

    def byte_length(self) -> int:
        return len(self.body.encode("utf-8"))


def format_for_filename(filename: str) -> str:
    dot = filename.rfind(".")
    ext = filename[dot:].lower() if dot >= 0 else ""
    try:
        return _EXTENSIONS[ext]
    except KeyError:
        raise UnsupportedFormat(f"unsupported upload {filename!r}") from None


def parse_document(
    raw: bytes,
    declared_format: str,
    doc_id: str = "",
    title: str | None = None,
) -> MaterialDocument:
    """Decode an upload and build its section index; the body is kept as is."""
    if declared_format not in FORMATS:
        raise UnsupportedFormat(f"unsupported format {declared_format!r}")
    try:
        body = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"upload is not valid UTF-8: {exc.reason}") from exc
    if not body.strip():
        raise EmptyDocument("document has no content")

    sections = (
        _markdown_sections(body) if declared_format == MARKDOWN else _single_section(body)
    )
    if title is None or not title.strip():
        title = _derive_title(body, sections)
    doc = MaterialDocument(doc_id, title, body, declared_format, sections)
    validate_document(doc)
    return doc


def _single_section(body: str) -> tuple[Section, ...]:
    return (Section("", 0, 0, len(body.encode("utf-8"))),)


def _markdown_sections(body: str) -> tuple[Section, ...]:
    total = len(body.encode("utf-8"))
    headings: list[tuple[str, int, int]] = []  # (text, depth, byte start)
    offset = 0
    for line in body.splitlines(keepends=True):
        match = _HEADING.match(line.rstrip("\r\n"))
        if match:
            headings.append((match.group(2), len(match.group(1)), offset))
        offset += len(line.encode("utf-8"))
    if not headings:
        return _single_section(body)

    sections: list[Section] = []
    first_start = headings[0][2]
    if first_start > 0 and body.encode("utf-8")[:first_start].decode("utf-8").strip():
        sections.append(Section("", 0, 0, first_start))
    for i, (text, depth, start) in enumerate(headings):
        end = headings[i + 1][2] if i + 1 < len(headings) else total
        sections.append(Section(text, depth, start, end))
    return tuple(sections)


def _derive_title(body: str, sections: tuple[Section, ...]) -> str:
    for section in sections:
        if section.heading:
            return section.heading
    for line in body.splitlines():
        if line.strip():
            return line.strip()[:80]
    return "untitled"


def validate_document(doc: MaterialDocument) -> None:
    if doc.format not in FORMATS:
        raise BadMaterialDocument(f"unknown format {doc.format!r}")
    if not doc.body.strip():
        raise BadMaterialDocument("empty body")
    total = doc.byte_length()
    previous_end = 0
    for section in doc.sections:
        if not 0 <= section.start < section.end <= total:
            raise BadMaterialDocument(
                f"section range [{section.start}, {section.end}) outside body"
            )
        if section.start < previous_end:
            raise BadMaterialDocument("section ranges overlap")
        if not 0 <= section.depth <= 6:
            raise BadMaterialDocument(f"section depth {section.depth} out of range")
        previous_end = section.end


def section_at(doc: MaterialDocument, byte_offset: int) -> Section | None:
    """The section whose range contains the offset, if any."""
    for section in doc.sections:
        if section.start <= byte_offset < section.end:
            return section
    return None


def document_to_dict(doc: MaterialDocument) -> dict:
    return {
        "format": MATERIAL_FORMAT,
        "version": MATERIAL_VERSION,
        "id": doc.id,
        "title": doc.title,
        "body": doc.body,
        "body_format": doc.format,
        "sections": [
            {"heading": s.heading, "depth": s.depth, "start": s.start, "end": s.end}
            for s in doc.sections
        ],
    }


def document_from_dict(data: dict) -> MaterialDocument:
    if data.get("format") != MATERIAL_FORMAT:
        raise BadMaterialDocument(f"not a {MATERIAL_FORMAT} document")
    if data.get("version") != MATERIAL_VERSION:
        raise BadMaterialDocument(f"unsupported version {data.get('version')!r}")
    try:
        doc = MaterialDocument(
            id=data["id"],
            title=data["title"],
            body=data["body"],
            format=data["body_format"],
            sections=tuple(
                Section(s["heading"], s["depth"], s["start"], s["end"])
                for s in data["sections"]
            ),
        )
    except (KeyError, TypeError) as exc:
        raise BadMaterialDocument(f"invalid material document: {exc}") from exc
    validate_document(doc)
    return doc
