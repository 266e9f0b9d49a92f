"""
Unit tests for logger utility
"""

import io
import unittest
import tempfile
import shutil
import logging
from pathlib import Path
from unittest.mock import patch, MagicMock

from src.utils.logger import PACKAGE_LOGGER, RESET, ColorFormatter, setup_logger


class TestLogger(unittest.TestCase):

    def setUp(self):
        """Set up test environment"""
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up test environment"""
        for name in (PACKAGE_LOGGER, "test_logger", "test_clear"):
            logger = logging.getLogger(name)
            for handler in logger.handlers:
                handler.close()
            logger.handlers.clear()
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def test_setup_logger_default(self):
        """Test logger setup with default parameters"""
        logger = setup_logger(stream=io.StringIO())

        self.assertIsInstance(logger, logging.Logger)
        self.assertEqual(logger.name, "src")
        self.assertEqual(logger.level, logging.WARNING)

        # Console only without a log directory
        self.assertEqual(len(logger.handlers), 1)
        self.assertIsInstance(logger.handlers[0], logging.StreamHandler)

    def test_setup_logger_custom_name_level(self):
        """Test logger setup with custom name and level"""
        logger = setup_logger(name="test_logger", level=logging.DEBUG, stream=io.StringIO())

        self.assertEqual(logger.name, "test_logger")
        self.assertEqual(logger.level, logging.DEBUG)

    def test_log_dir_adds_file_handler(self):
        """A log directory gets a timestamped DEBUG file"""
        log_dir = Path(self.test_dir) / "logs"
        logger = setup_logger(level=logging.WARNING, log_dir=log_dir, stream=io.StringIO())

        self.assertEqual(len(logger.handlers), 2)
        self.assertEqual(logger.level, logging.DEBUG)
        files = list(log_dir.glob("etabench_*.log"))
        self.assertEqual(len(files), 1)

        logging.getLogger("src.elab.elaborator").debug("checked x")
        for handler in logger.handlers:
            handler.flush()
        content = files[0].read_text(encoding="utf-8")
        self.assertIn("Logger initialized", content)
        self.assertIn("checked x", content)

    def test_logger_handlers_configuration(self):
        """Test that handlers are properly configured"""
        with patch('src.utils.logger.logging.FileHandler') as mock_file_handler:
            with patch('src.utils.logger.logging.StreamHandler') as mock_stream_handler:
                mock_file_instance = MagicMock()
                mock_stream_instance = MagicMock()
                mock_file_handler.return_value = mock_file_instance
                mock_stream_handler.return_value = mock_stream_instance

                # Mock the level attribute for handlers
                mock_file_instance.level = logging.DEBUG
                mock_stream_instance.level = logging.INFO

                # Mock the logger.info call to avoid actual logging during test
                with patch.object(logging.Logger, 'info'):
                    setup_logger(level=logging.INFO, log_dir=Path(self.test_dir))

                # Verify file handler setup
                mock_file_handler.assert_called_once()
                mock_file_instance.setLevel.assert_called_with(logging.DEBUG)
                mock_file_instance.setFormatter.assert_called_once()

                # Verify stream handler setup
                mock_stream_handler.assert_called_once()
                mock_stream_instance.setLevel.assert_called_with(logging.INFO)
                mock_stream_instance.setFormatter.assert_called_once()

    def test_logger_clears_existing_handlers(self):
        """Test that existing handlers are cleared"""
        existing_logger = logging.getLogger("test_clear")
        existing_logger.addHandler(logging.StreamHandler())
        existing_logger.addHandler(logging.StreamHandler())

        logger = setup_logger(name="test_clear", stream=io.StringIO())

        self.assertEqual(len(logger.handlers), 1)

    def test_console_writes_module_records(self):
        """Records from src.* module loggers reach the console handler"""
        stream = io.StringIO()
        setup_logger(level=logging.INFO, stream=stream, color=False)

        logging.getLogger("src.bench.harness").info("Benchmarking stlc")

        self.assertIn("INFO: Benchmarking stlc", stream.getvalue())

    def test_no_color_on_non_tty_stream(self):
        stream = io.StringIO()
        setup_logger(level=logging.WARNING, stream=stream, color=True)

        logging.getLogger("src.nbe").warning("odd")

        self.assertNotIn("\033[", stream.getvalue())


class TestColorFormatter(unittest.TestCase):

    def make_record(self):
        return logging.LogRecord("src", logging.ERROR, __file__, 1, "boom", None, None)

    def test_colors_level_name(self):
        text = ColorFormatter('%(levelname)s: %(message)s', color=True).format(self.make_record())
        self.assertTrue(text.startswith("\033[31mERROR" + RESET))

    def test_plain_when_disabled(self):
        text = ColorFormatter('%(levelname)s: %(message)s', color=False).format(self.make_record())
        self.assertEqual(text, "ERROR: boom")

    def test_record_is_restored(self):
        record = self.make_record()
        ColorFormatter('%(levelname)s', color=True).format(record)
        self.assertEqual(record.levelname, "ERROR")


if __name__ == '__main__':
    unittest.main()
