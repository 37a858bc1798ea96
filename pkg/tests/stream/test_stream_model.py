import numpy as np
import pytest

from src.stream.stream_model import (
    BinaryImage,
    LabelGroup,
    LabelImage,
    PixelGroup,
    check_framing,
    pack_frame,
    unpack_labels,
    unpack_pixels,
)
from src.utils.errors import DimensionError, FramingError


def test_pack_frame_flags(make_image):
    img = make_image(["10000001", "01100000"])
    groups = pack_frame(img)

    assert len(groups) == 4
    assert groups[0].pixels == (1, 0, 0, 0)
    assert groups[1].pixels == (0, 0, 0, 1)
    assert [g.sof for g in groups] == [True, False, False, False]
    assert [g.eol for g in groups] == [False, True, False, True]
    check_framing(groups, img.groups_per_row)


def test_pack_unpack_pixels(make_image):
    img = make_image(["1011", "0100", "1111"])
    assert unpack_pixels(pack_frame(img), 4, 3) == img


def test_unpack_skips_invalid_groups():
    groups = [
        LabelGroup((1, 0, 0, 2), sof=True, eol=True),
        LabelGroup((9, 9, 9, 9), valid=False),
        LabelGroup((0, 3, 3, 0), eol=True),
    ]
    out = unpack_labels(groups, 4, 2)
    assert out.data.tolist() == [[1, 0, 0, 2], [0, 3, 3, 0]]


def test_unpack_length_mismatch():
    groups = [LabelGroup((1, 1, 1, 1), sof=True, eol=True)]
    with pytest.raises(FramingError):
        unpack_labels(groups, 4, 2)


@pytest.mark.parametrize("width", [2, 6, 13])
def test_width_not_multiple_of_four(width):
    img = BinaryImage.zeros(width, 1)
    with pytest.raises(DimensionError):
        pack_frame(img)


def test_binary_image_rejects_non_binary():
    with pytest.raises(DimensionError):
        BinaryImage(4, 1, np.array([[0, 1, 2, 0]], dtype=np.uint8))


def test_check_framing_detects_missing_eol():
    groups = [PixelGroup((0, 0, 0, 0), sof=True), PixelGroup((0, 0, 0, 0))]
    with pytest.raises(FramingError):
        check_framing(groups, 2)


def test_label_image_background_match(make_image):
    img = make_image(["1001"])
    labels = LabelImage.from_array([[5, 0, 0, 7]])
    assert labels.matches_background(img)
    assert not LabelImage.from_array([[5, 1, 0, 7]]).matches_background(img)
