from pathlib import Path

from neolrp.infrastructure.exceptions import ParseError


def read_text(path: Path, section: str) -> str:
    """UTF-8 contents of `path`; undecodable bytes become a ParseError naming `section`."""
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path.name} is not valid UTF-8 at byte {e.start}", None, section) from e
