# tests/test_tactile.py - 촉각 센서 모델 테스트
import numpy as np
import pytest

from config.models import SensorModel
from core.tactile import TactileSensor, binary_force, calibrate_threshold, raw_force


def test_raw_force_without_noise_is_exact(quiet_sensor):
    """노이즈 off: raw = scale · f_contact (정확히)"""
    assert raw_force([0.05, 0.0], quiet_sensor)[0] == 5.0
    rng = np.random.default_rng(0)
    contacts = rng.uniform(0.0, 0.1, size=1_000_000)
    np.testing.assert_array_equal(raw_force(contacts, quiet_sensor), contacts * 100.0)


def test_raw_force_noise_statistics():
    """비접촉 노이즈: 평균 0, 표준편차 σ"""
    model = SensorModel()
    rng = np.random.default_rng(1)
    samples = raw_force(np.zeros(10_000), model, rng)
    assert 0.0070 <= samples.std(ddof=1) <= 0.0085
    assert abs(samples.mean()) < 4 * model.sigma / np.sqrt(samples.size)


def test_raw_force_noise_requires_rng():
    with pytest.raises(ValueError):
        raw_force([0.0, 0.0], SensorModel())


def test_binary_examples():
    model = SensorModel(noise_enabled=False)
    np.testing.assert_array_equal(binary_force([0.5, 0.0], model), [1, 0])
    np.testing.assert_array_equal(binary_force([0.02, 0.03], model), [0, 1])
    np.testing.assert_array_equal(binary_force([-1.0, -0.01], model), [0, 0])


def test_binary_threshold_is_strict():
    """임계값과 같은 값은 비접촉"""
    model = SensorModel(f_thresh=(0.0231, 0.0231))
    np.testing.assert_array_equal(binary_force([0.0231, np.nextafter(0.0231, 1.0)], model), [0, 1])


def test_binary_is_threshold_comparison():
    """무작위 임계값 500 쌍 × 100 행 × 2 센서 = 10^5 (f_raw, f_thresh) 쌍"""
    rng = np.random.default_rng(2)
    for _ in range(500):
        thresh = rng.uniform(0.0, 0.1, size=2)
        model = SensorModel(f_thresh=(float(thresh[0]), float(thresh[1])))
        raw = rng.uniform(-0.5, 2.0, size=(100, 2)) * thresh
        raw[0] = thresh
        expected = (raw > thresh).astype(np.int64)
        np.testing.assert_array_equal(binary_force(raw, model), expected)


def test_calibrate_constant_samples():
    assert calibrate_threshold([0.25] * 10) == (0.0, 0.0)


def test_calibrate_two_samples():
    sigma, thresh = calibrate_threshold([-0.01, 0.01])
    assert sigma == pytest.approx(0.0141421356, rel=1e-8)
    assert thresh == pytest.approx(3 * sigma)


def test_calibrate_recovers_noise_level():
    """σ=0.0077 로 생성한 10,000 샘플에서 σ 복원"""
    samples = np.random.default_rng(4).normal(0.0, 0.0077, size=10_000)
    sigma, thresh = calibrate_threshold(samples)
    assert sigma == pytest.approx(0.0077, abs=2e-4)
    assert thresh == pytest.approx(3 * sigma)


def test_calibrate_needs_two_samples():
    with pytest.raises(ValueError):
        calibrate_threshold([0.01])


def test_sensor_reading_reproducible():
    """같은 시드 → 같은 노이즈 열"""
    model = SensorModel()
    a = TactileSensor(model, np.random.default_rng(9))
    b = TactileSensor(model, np.random.default_rng(9))
    for f in ([0.0, 0.0], [0.01, 0.002], [0.02, 0.0]):
        ra, rb = a.read(f), b.read(f)
        np.testing.assert_array_equal(ra.f_raw, rb.f_raw)
        np.testing.assert_array_equal(ra.f_binary, rb.f_binary)


def test_sensor_reading_fields(quiet_sensor):
    reading = TactileSensor(quiet_sensor).read([0.01, 0.0])
    np.testing.assert_array_equal(reading.f_contact, [0.01, 0.0])
    np.testing.assert_array_equal(reading.f_raw, [1.0, 0.0])
    np.testing.assert_array_equal(reading.f_binary, [1, 0])
