"""
Source file loader
Reads .ett files and hands their text to the program parser
"""

import logging
from pathlib import Path
from typing import Tuple

from src.core.raw import RawProgram
from src.data.diagnostics import ParseError
from src.data.program_parser import parse_program


class SourceParser:
    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.supported_formats = ['.ett']

    def parse_file(self, file_path) -> Tuple[str, RawProgram]:
        """
        Load and parse a program file

        Args:
            file_path: Path to a .ett file

        Returns:
            The source text and the parsed program
        """
        try:
            file_path = Path(file_path)

            if not file_path.exists():
                raise FileNotFoundError(f"File not found: {file_path}")

            if file_path.suffix.lower() not in self.supported_formats:
                raise ValueError(f"Unsupported file format: {file_path.suffix}")

        except Exception as e:
            self.logger.error(f"Error loading source file: {str(e)}")
            raise

        source = file_path.read_text(encoding='utf-8')
        return source, self.parse_source(source, str(file_path))

    def parse_source(self, source: str, origin: str = "<string>") -> RawProgram:
        """Parse already-loaded text, logging diagnostics before re-raising"""
        self.logger.info(f"Parsing {origin} ({len(source)} characters)")
        try:
            program = parse_program(source)
        except ParseError as e:
            self.logger.debug(f"Parse of {origin} failed: {e.format(source, origin)}")
            raise
        self.logger.debug(f"Parsed {len(program)} declarations from {origin}")
        return program
