import numpy as np
import pytest

from hueseg import (
    ConfigError,
    DimensionMismatchError,
    Disk,
    MaskMetrics,
    Rectangle,
    SegMask,
    SplitMix64,
    SynthSpec,
    hue_bin,
    rgb_to_hsi,
    saturated_bin_color,
    score,
    synth_scene,
    to_hue_field,
    write_ppm,
)


def test_splitmix64_reference_vectors():
    # published outputs of the splitmix64 reference implementation, seed 0
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix64_below_is_in_range_and_deterministic():
    a = SplitMix64(99)
    b = SplitMix64(99)
    seq_a = [a.below(10) for _ in range(100)]
    seq_b = [b.below(10) for _ in range(100)]
    assert seq_a == seq_b
    assert all(0 <= v < 10 for v in seq_a)


def test_bin_colors_are_saturated_and_quantize_back():
    for b in range(256):
        r, g, bl = saturated_bin_color(b)
        assert min(r, g, bl) == 0
        p = rgb_to_hsi(r, g, bl)
        assert p.saturation == 1.0
        assert not p.achromatic
        assert hue_bin(p) == b


def test_rect_scene_construction():
    spec = SynthSpec(64, 64, 85, 0, Rectangle(22, 22, 20, 20))
    img, gt = synth_scene(spec)
    assert gt.foreground_count() == 400
    assert (img.width, img.height) == (64, 64)


def test_clean_scene_background_bins_uniform():
    spec = SynthSpec(64, 64, 85, 0, Rectangle(22, 22, 20, 20))
    img, gt = synth_scene(spec)
    field = to_hue_field(img)
    assert (field.bins[~gt.foreground] == 85).all()
    assert (field.bins[gt.foreground] == 0).all()
    assert not field.achromatic.any()


def test_disk_scene_area_matches_render():
    spec = SynthSpec(64, 64, 10, 200, Disk(32, 32, 14))
    _, gt = synth_scene(spec)
    yy, xx = np.mgrid[0:64, 0:64]
    expected = (xx - 32) ** 2 + (yy - 32) ** 2 <= 14 * 14
    assert np.array_equal(gt.foreground, expected)


def test_scene_determinism():
    spec = SynthSpec(48, 48, 12, 200, Rectangle(10, 10, 20, 20), 0.1, seed=7)
    img1, gt1 = synth_scene(spec)
    img2, gt2 = synth_scene(spec)
    assert write_ppm(img1) == write_ppm(img2)
    assert gt1 == gt2


def test_noise_count_and_placement():
    spec = SynthSpec(50, 50, 85, 0, Rectangle(15, 15, 20, 20), 0.03, seed=11)
    img, gt = synth_scene(spec)
    field = to_hue_field(img)
    bg = ~gt.foreground
    noisy = bg & (field.bins != 85)
    assert noisy.sum() == int(0.03 * bg.sum())  # floor of fraction * count
    # noise never touches the shape
    assert (field.bins[gt.foreground] == 0).all()
    # noise colors are saturated non-background bins
    assert (field.bins[noisy] != 85).all()


def test_noise_seed_changes_placement():
    base = dict(width=50, height=50, bg_bin=85, fg_bin=0, shape=Rectangle(15, 15, 20, 20))
    img1, _ = synth_scene(SynthSpec(**base, noise_fraction=0.05, seed=1))
    img2, _ = synth_scene(SynthSpec(**base, noise_fraction=0.05, seed=2))
    assert write_ppm(img1) != write_ppm(img2)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(width=32, height=32, bg_bin=85, fg_bin=85, shape=Rectangle(8, 8, 8, 8)),
        dict(width=32, height=32, bg_bin=85, fg_bin=0, shape=Rectangle(0, 8, 8, 8)),
        dict(width=32, height=32, bg_bin=85, fg_bin=0, shape=Rectangle(8, 8, 24, 8)),
        dict(width=32, height=32, bg_bin=85, fg_bin=0, shape=Disk(16, 16, 16)),
        dict(width=32, height=32, bg_bin=85, fg_bin=0, shape=Rectangle(8, 8, 8, 8), noise_fraction=1.5),
        dict(width=32, height=32, bg_bin=256, fg_bin=0, shape=Rectangle(8, 8, 8, 8)),
    ],
)
def test_invalid_specs_rejected(kwargs):
    with pytest.raises(ConfigError):
        SynthSpec(**kwargs)


def mask_of(rows):
    return SegMask(np.array(rows, dtype=bool))


class TestScore:
    def test_identical_masks(self):
        m = mask_of([[1, 0], [0, 1]])
        s = score(m, m)
        assert s.iou == 1.0
        assert s.f1 == 1.0
        assert s.pixel_accuracy == 1.0

    def test_empty_prediction(self):
        pred = mask_of([[0, 0], [0, 0]])
        gt = mask_of([[1, 1], [0, 0]])
        s = score(pred, gt)
        assert s.iou == 0.0
        assert s.recall == 0.0

    def test_both_empty(self):
        m = mask_of([[0, 0]])
        s = score(m, m)
        assert s.iou == 1.0
        assert s.precision == 1.0
        assert s.recall == 1.0

    def test_shifted_square(self):
        gt = np.zeros((4, 5), dtype=bool)
        gt[1:3, 1:3] = True
        pred = np.zeros((4, 5), dtype=bool)
        pred[1:3, 2:4] = True
        s = score(SegMask(pred), SegMask(gt))
        assert (s.tp, s.fp, s.fn) == (2, 2, 2)
        assert abs(s.iou - 2.0 / 6.0) < 1e-12

    def test_symmetry_of_iou(self):
        rng = np.random.default_rng(13)
        a = SegMask(rng.integers(0, 2, size=(9, 9)).astype(bool))
        b = SegMask(rng.integers(0, 2, size=(9, 9)).astype(bool))
        assert score(a, b).iou == score(b, a).iou

    def test_counts_partition_the_image(self):
        rng = np.random.default_rng(14)
        a = SegMask(rng.integers(0, 2, size=(7, 11)).astype(bool))
        b = SegMask(rng.integers(0, 2, size=(7, 11)).astype(bool))
        s = score(a, b)
        assert s.tp + s.fp + s.fn + s.tn == 7 * 11
        for value in (s.iou, s.precision, s.recall, s.f1, s.pixel_accuracy):
            assert 0.0 <= value <= 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            score(mask_of([[1, 0]]), mask_of([[1], [0]]))

    def test_metrics_dict_round_trip(self):
        s = MaskMetrics.from_counts(3, 1, 2, 10)
        d = s.to_dict()
        assert d["tp"] == 3 and d["tn"] == 10
        assert d["iou"] == 3 / 6
