"""
Explanation loggers that narrate how every pairing term of an invariant was obtained.

The engine reports each value with the stage it belongs to
(seeds, ttms, ptms, cartan, ntms, assembly) and the rule that produced it.

Programmer: liepyx team
Since: 2026-10
"""

import logging

STAGES = ("seeds", "ttms", "ptms", "cartan", "ntms", "assembly")

TEXTS = {
    "seed": {
        "en": "%s is a pure-slice term; its value is fixed by the normalization: %s",
    },
    "top": {
        "en": "%s peels a factor through its ad-epsilon preimage: %s",
    },
    "p": {
        "en": "%s writes one copy of p as [epsilon, x_p]: %s",
    },
    "cartan": {
        "en": "%s is the pure-Cartan term: %s",
    },
    "negative": {
        "en": "%s peels its first negative factor: %s",
    },
    "stage_start": {
        "en": "Stage %s: %d terms.",
    },
    "assembled": {
        "en": "Assembled a polynomial with %d monomials of degree %d.",
    },
}


class ExplanationLogger:
    """
    The base explanation logger does nothing.
    """

    def __init__(self, language="en"):
        self.language = language

    def warning(self, message: str, *args, stages=None):
        pass

    def info(self, message: str, *args, stages=None):
        pass

    def debug(self, message: str, *args, stages=None):
        pass

    def text(self, code: str) -> str:
        return TEXTS[code][self.language]

    def explain_stage(self, stage: str, num_of_terms: int):
        self.info(self.text("stage_start"), stage, num_of_terms, stages=stage)

    def explain_value(self, stage: str, key, rule: str, value):
        self.debug(self.text(rule), key.bookkeeping(), value, stages=stage)

    def explain_assembly(self, num_of_monomials: int, degree: int):
        self.info(self.text("assembled"), num_of_monomials, degree, stages="assembly")


class SingleExplanationLogger(ExplanationLogger):
    """
    An explanation logger in which all messages are written to the same single base-logger.
    """
    def __init__(self, logger: logging.Logger, language="en"):
        super().__init__(language)
        self.logger = logger

    def debug(self, message: str, *args, stages=None):
        self.logger.debug(_prefixed(message, stages), *args)

    def info(self, message: str, *args, stages=None):
        self.logger.info(_prefixed(message, stages), *args)

    def warning(self, message: str, *args, stages=None):
        self.logger.warning(_prefixed(message, stages), *args)


class ConsoleExplanationLogger(SingleExplanationLogger):
    """
    A convenience class: an explanation logger in which all messages are written to the console.
    """
    def __init__(self, level=logging.DEBUG, language="en"):
        logger = logging.getLogger("Explanation console")
        logger.setLevel(level)
        if not logger.handlers:
            logger.addHandler(logging.StreamHandler())
        super().__init__(logger, language)


class ExplanationLoggerPerStage(ExplanationLogger):
    """
    An explanation logger in which there is one logger per stage.
    """

    def __init__(self, map_stage_to_logger: dict[str, logging.Logger], language="en"):
        super().__init__(language)
        self.map_stage_to_logger = map_stage_to_logger

    def _loggers(self, stages):
        if stages is None:
            return list(self.map_stage_to_logger.values())
        if is_individual_stage(stages):
            stages = [stages]
        return [self.map_stage_to_logger[stage] for stage in stages]

    def debug(self, message: str, *args, stages=None):
        for logger in self._loggers(stages):
            logger.debug(message, *args)

    def info(self, message: str, *args, stages=None):
        for logger in self._loggers(stages):
            logger.info(message, *args)

    def warning(self, message: str, *args, stages=None):
        for logger in self._loggers(stages):
            logger.warning(message, *args)


class FilesExplanationLogger(ExplanationLoggerPerStage):
    """
    A convenience class: an explanation logger in which the messages of each stage are written to a stage-specific file.
    """
    def __init__(self, map_stage_to_filename: dict, level=logging.DEBUG, language="en", **kwargs):
        map_stage_to_logger = {}
        for stage, filename in map_stage_to_filename.items():
            logger = logging.getLogger(f"Explanation file for stage {stage} ({filename})")
            logger.setLevel(level)
            logger.addHandler(logging.FileHandler(filename, **kwargs))
            map_stage_to_logger[stage] = logger
        super().__init__(map_stage_to_logger, language)


class LogStream(object):
    def __init__(self):
        self.text = ''

    def write(self, str):
        self.text += str

    def flush(self):
        pass

    def __str__(self):
        return self.text


class StringsExplanationLogger(ExplanationLoggerPerStage):
    """
    A convenience class: an explanation logger in which the messages of each stage are kept in a stage-specific string.

    >>> explanation_logger = StringsExplanationLogger()
    >>> explanation_logger.explain_stage("ttms", 8)
    >>> explanation_logger.stage_string("ttms")
    'Stage ttms: 8 terms.\\n'
    >>> explanation_logger.stage_string("ntms")
    ''
    """
    def __init__(self, stages: list = STAGES, level=logging.DEBUG, language="en"):
        map_stage_to_logger = {}
        self.map_stage_to_stream = {}
        for stage in stages:
            self.map_stage_to_stream[stage] = LogStream()
            logger = logging.getLogger(f"Explanation string for stage {stage} {id(self)}")
            logger.setLevel(level)
            logger.propagate = False
            logger.addHandler(logging.StreamHandler(self.map_stage_to_stream[stage]))
            map_stage_to_logger[stage] = logger
        super().__init__(map_stage_to_logger, language)

    def stage_string(self, stage: str) -> str:
        return str(self.map_stage_to_stream[stage])

    def map_stage_to_explanation(self) -> dict[str, str]:
        return {
            stage: str(self.map_stage_to_stream[stage])
            for stage in self.map_stage_to_stream.keys()
        }


def is_individual_stage(stages):
    return isinstance(stages, str)


def _prefixed(message: str, stages) -> str:
    if stages is None or not is_individual_stage(stages):
        return message
    return stages + ": " + message.strip()


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
