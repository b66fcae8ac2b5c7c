# -*- coding: utf-8 -*-
"""Read spectrum presentations from files.

A presentation file is a JSON document (YAML is accepted too)::

    {
      "name": "BP",
      "prime": 2,
      "coefficients": [{"family": "2p^i-2", "min_index": 1, "symbol": "v"}],
      "generators": [{"family": "2p^i-2", "min_index": 1, "symbol": "t"}],
      "coop_class": "PolynomialWithKochmanTorsion",
      "odd_commutativity_ok": true
    }

``coefficients`` lists the generators of E_*; when it is missing the
``generators`` are used for both. The cooperation degrees are generated by
the coefficient generators together with ``generators``. Single generators
are written ``{"degree": 6, "invertible": true, "label": "v2"}``.
"""

from __future__ import print_function
import logging

import yaml
from sympy import isprime

from gammastage import degrees
from gammastage.errors import ParseError, SchemaError
from gammastage.stagescan import CoopClass, SpectrumPresentation

log = logging.getLogger(__name__)

_FAMILIES = {"2p^i-2": 2, "2p^i-1": 1}
_TOP_KEYS = {"name", "prime", "coefficients", "generators", "coop_class",
             "odd_commutativity_ok", "refinable", "notes"}
_DEGREE_KEYS = {"degree", "invertible", "label"}
_FAMILY_KEYS = {"family", "min_index", "max_index", "invertible", "symbol"}


class FilelikeLoader(object):
    """Baseclass for classes that will load a file, or file-like object. We
    test to see if the passed object looks like a filehandle, or just a
    filename.
    """

    def load(self, filelike):
        """Parse the file into a presentation.

        :param filelike filelike: File handle, str filename or the file
                                  contents. A str is read as contents when it
                                  spans several lines, starts with '{' or is
                                  longer than 255 characters; otherwise it names
                                  a UTF-8 encoded file.
        """

        if hasattr(filelike, 'read'):
            # it's probably a file handler, or something like that
            try:
                return self._load(filelike.read())
            except UnicodeDecodeError as e:
                raise ParseError("input is not UTF-8: %s" % e.reason)
        elif type(filelike) is str and _looks_like_contents(filelike):
            # it's maybe a str containing the file contents?
            return self._load(filelike)
        else:
            # maybe a filename?
            try:
                with open(filelike, 'r', encoding='utf-8') as fh:
                    return self._load(fh.read())
            except UnicodeDecodeError as e:
                raise ParseError("cannot read %s: not UTF-8 (%s)" % (filelike, e.reason))
            except IOError as e:
                raise ParseError("cannot read %s: %s" % (filelike, e.strerror))


def _looks_like_contents(text):
    return len(text) > 255 or "\n" in text.strip() or text.lstrip().startswith('{')


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class SpectrumLoader(FilelikeLoader):
    """File loader for spectrum presentations (.json or .yaml)
    """

    def _load(self, file_str):
        try:
            data = yaml.safe_load(file_str)
        except yaml.YAMLError as e:
            raise ParseError("presentation is neither JSON nor YAML: %s" % e)
        if not isinstance(data, dict):
            raise SchemaError("a presentation must be a mapping, got %s" % type(data).__name__)

        unknown = sorted(set(data) - _TOP_KEYS)
        if unknown:
            raise SchemaError("unknown keys: %s" % ", ".join(unknown))
        for key in ("name", "prime", "generators", "coop_class", "odd_commutativity_ok"):
            if key not in data:
                raise SchemaError("missing required key %r" % key)

        name = data["name"]
        if not isinstance(name, str) or not name:
            raise SchemaError("name must be a non-empty string")
        prime = data["prime"]
        if not _is_int(prime) or not isprime(prime):
            raise SchemaError("prime must be a prime integer, got %r" % (prime,))
        try:
            coop_class = CoopClass(data["coop_class"])
        except ValueError:
            raise SchemaError("coop_class must be one of %s, got %r" % (
                ", ".join(c.value for c in CoopClass), data["coop_class"]))
        for key in ("odd_commutativity_ok", "refinable"):
            if key in data and not isinstance(data[key], bool):
                raise SchemaError("%s must be true or false" % key)
        notes = data.get("notes", [])
        if not isinstance(notes, list) or not all(isinstance(n, str) for n in notes):
            raise SchemaError("notes must be a list of strings")

        coop_gens, coop_families = self._generators(data["generators"], prime, "generators")
        if "coefficients" in data:
            coeff_gens, coeff_families = self._generators(data["coefficients"], prime, "coefficients")
            coop_gens = coeff_gens + coop_gens
            coop_families = coeff_families + coop_families
        else:
            coeff_gens, coeff_families = list(coop_gens), list(coop_families)

        coefficients = degrees.DegreeSet(coeff_gens, coeff_families, name="%s_*" % name)
        cooperations = degrees.DegreeSet(coop_gens, coop_families, name="%s_*%s" % (name, name))
        spec = SpectrumPresentation(name, prime, coefficients, cooperations, coop_class,
                                    odd_commutativity_ok=data["odd_commutativity_ok"],
                                    refinable=data.get("refinable", True), notes=notes)
        log.debug("loaded presentation %r", spec)
        return spec.validate()

    def _generators(self, entries, prime, where):
        if not isinstance(entries, list):
            raise SchemaError("%s must be a list" % where)
        generators, families = [], []
        for i, entry in enumerate(entries):
            at = "%s[%d]" % (where, i)
            if not isinstance(entry, dict):
                raise SchemaError("%s must be a mapping" % at)
            if "degree" in entry:
                unknown = sorted(set(entry) - _DEGREE_KEYS)
                if unknown:
                    raise SchemaError("%s: unknown keys %s" % (at, ", ".join(unknown)))
                if not _is_int(entry["degree"]) or entry["degree"] == 0:
                    raise SchemaError("%s: degree must be a non-zero integer" % at)
                invertible = entry.get("invertible", False)
                if not isinstance(invertible, bool):
                    raise SchemaError("%s: invertible must be true or false" % at)
                generators.append(degrees.DegreeGenerator(
                    entry["degree"], invertible, str(entry.get("label", ""))))
            elif "family" in entry:
                unknown = sorted(set(entry) - _FAMILY_KEYS)
                if unknown:
                    raise SchemaError("%s: unknown keys %s" % (at, ", ".join(unknown)))
                if entry["family"] not in _FAMILIES:
                    raise SchemaError("%s: family must be one of %s" % (at, ", ".join(sorted(_FAMILIES))))
                if entry.get("invertible", False):
                    raise SchemaError("%s: a generator family cannot be invertible" % at)
                offset = _FAMILIES[entry["family"]]
                min_index = entry.get("min_index", 1)
                max_index = entry.get("max_index")
                if not _is_int(min_index) or (max_index is not None and not _is_int(max_index)):
                    raise SchemaError("%s: min_index and max_index must be integers" % at)
                try:
                    families.append(degrees.GeneratorFamily(prime, offset, min_index, max_index,
                                                            str(entry.get("symbol", ""))))
                except ValueError as e:
                    raise SchemaError("%s: %s" % (at, e))
            else:
                raise SchemaError("%s needs either 'degree' or 'family'" % at)
        return generators, families


def load_spectrum(filelike):
    """Load and validate a presentation file.

    :raises ParseError: unreadable file or syntax
    :raises SchemaError: the data does not follow the schema
    :raises InvariantError: the presentation violates an invariant
    """
    return SpectrumLoader().load(filelike)
