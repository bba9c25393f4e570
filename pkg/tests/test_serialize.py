"""JSON documents: round trips, strict integer decoding, verification dispatch."""

import json

import pytest

from packpoly import (
    CantorMatch,
    LinearSubject,
    QuadPoly2,
    StructuralFail,
    ValidationCheck,
    classify,
    document_from_json,
    document_to_json,
    make_document,
    refute_linear,
    verify_document,
)

REFERENCE = [
    QuadPoly2(1, 1, 1, 1, 3, 0),
    QuadPoly2(1, 1, 1, 3, 1, 0),
    QuadPoly2(1, 0, 1, 1, 1, 0),
    QuadPoly2(1, 1, 1, 1, 3, 2),
    QuadPoly2(1, 1, 1, 1, 1, 0),
    QuadPoly2(1, -2, 1, 1, 1, 0),
    QuadPoly2(1, 3, 9, -9, -9, 0),
    QuadPoly2(1, 1, 1, 2, 3, 0),
]


class TestRoundTrip:
    @pytest.mark.parametrize("F", REFERENCE, ids=str)
    def test_every_certificate_kind_survives(self, F):
        cert = classify(F)
        text = document_to_json(F, cert)
        subject2, cert2 = document_from_json(text)
        assert subject2 == F
        assert cert2 == cert
        assert verify_document(subject2, cert2)

    def test_linear_subject_survives(self):
        subject = LinearSubject((3, -4, 7), 2, 5)
        cert = refute_linear([3, -4, 7], 2, ell=5)
        subject2, cert2 = document_from_json(document_to_json(subject, cert))
        assert subject2 == subject
        assert cert2 == cert
        assert verify_document(subject2, cert2)

    def test_output_is_deterministic_and_sorted(self):
        F = QuadPoly2(1, 0, 1, 1, 1, 0)
        cert = classify(F)
        first = document_to_json(F, cert)
        second = document_to_json(F, cert)
        assert first == second
        node = json.loads(first)
        assert list(node) == sorted(node)
        assert list(node["subject"]["coefficients"]) == list("abcdef")

    def test_huge_coefficients_stay_exact(self):
        F = QuadPoly2(2, 0, 2, 0, 0, 10**40)
        cert = classify(F)
        text = document_to_json(F, cert)
        assert f'"f": "{10**40}"' in text
        subject2, cert2 = document_from_json(text)
        assert subject2.f == 10**40
        assert verify_document(subject2, cert2)

    def test_null_witness_fields_survive(self):
        F = QuadPoly2(1, 1, 1, 1, 3, 0)
        cert = StructuralFail(
            failures=(
                ValidationCheck(
                    name="f_nonnegative",
                    passed=False,
                    identity="synthetic",
                    witness=None,
                    doubled_value=None,
                ),
            )
        )
        _, cert2 = document_from_json(document_to_json(F, cert))
        assert cert2 == cert
        assert not verify_document(F, cert2)  # f = 0 is fine, claim is false


class TestStrictDecoding:
    def good_text(self):
        F = QuadPoly2(1, 1, 1, 1, 3, 2)
        return document_to_json(F, classify(F))

    def test_raw_json_numbers_rejected(self):
        text = self.good_text().replace('"f": "2"', '"f": 2')
        with pytest.raises(ValueError):
            document_from_json(text)

    @pytest.mark.parametrize("bad", ["1.5", "+5", " 3", "0x10", "", "--4", "3_0"])
    def test_malformed_integer_tokens_rejected(self, bad):
        text = self.good_text().replace('"f": "2"', f'"f": "{bad}"')
        with pytest.raises(ValueError):
            document_from_json(text)

    def test_wrong_format_tag_rejected(self):
        text = self.good_text().replace('"packing-certificate"', '"something-else"')
        with pytest.raises(ValueError):
            document_from_json(text)

    def test_wrong_version_rejected(self):
        text = self.good_text().replace('"version": 1', '"version": 2')
        with pytest.raises(ValueError):
            document_from_json(text)

    def test_unknown_certificate_kind_rejected(self):
        text = self.good_text().replace('"kind": "gap"', '"kind": "mystery"')
        with pytest.raises(ValueError):
            document_from_json(text)

    def test_missing_coefficient_rejected(self):
        node = json.loads(self.good_text())
        del node["subject"]["coefficients"]["e"]
        with pytest.raises(ValueError):
            document_from_json(json.dumps(node))

    def test_extra_coefficient_rejected(self):
        node = json.loads(self.good_text())
        node["subject"]["coefficients"]["g"] = "1"
        with pytest.raises(ValueError):
            document_from_json(json.dumps(node))

    def test_non_object_document_rejected(self):
        with pytest.raises(ValueError):
            document_from_json("[1, 2, 3]")


class TestVerificationDispatch:
    def test_subject_certificate_mismatch_is_false(self):
        linear = LinearSubject((1, 2), 0, 0)
        assert not verify_document(linear, CantorMatch(1))
        quad = QuadPoly2(1, 1, 1, 1, 3, 0)
        lin_cert = refute_linear([1, 2], 0)
        assert not verify_document(quad, lin_cert)

    def test_tampering_detected_after_round_trip(self):
        F = QuadPoly2(1, 0, 1, 1, 1, 0)
        node = make_document(F, classify(F))
        node["certificate"]["s"] = "9"
        subject2, cert2 = document_from_json(json.dumps(node))
        assert not verify_document(subject2, cert2)
