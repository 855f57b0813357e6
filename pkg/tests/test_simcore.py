# tests/test_simcore.py - 관절 적분 / 접촉 / 물체 동역학 테스트
import numpy as np
import pytest

from config.models import JointSpec, ObjectParams, SimConfig
from core.simcore import (
    LEFT,
    RIGHT,
    ChainState,
    ContactResult,
    GripperSim,
    JointLimits,
    ObjectState,
    compute_contact,
    integrate_joints,
    sim_step,
    step_object,
)

FINGERS = (0, 1)


def _finger_specs():
    return [
        JointSpec(name="right", q_min=0.0, q_max=0.045, v_max=0.05),
        JointSpec(name="left", q_min=0.0, q_max=0.045, v_max=0.05),
    ]


def _obj(x=0.0, v=0.0, **params):
    return ObjectState.from_params(ObjectParams(**params), x=x, v=v)


def _chain(q, qdot=None):
    q = np.asarray(q, dtype=np.float64)
    qdot = np.zeros_like(q) if qdot is None else np.asarray(qdot, dtype=np.float64)
    return ChainState(q=q, qdot=qdot)


def _sim(**overrides):
    config = SimConfig(**overrides)
    return GripperSim(config, _finger_specs(), FINGERS)


class TestIntegrateJoints:
    def setup_method(self):
        self.limits = JointLimits(q_min=np.array([0.0]), q_max=np.array([1.0]), v_max=np.array([1.0]))

    def test_free_motion(self):
        """한계 안에서는 q + v·dt"""
        out = integrate_joints(_chain([0.5]), [0.2], 0.1, self.limits)
        assert out.q[0] == pytest.approx(0.52)
        assert out.qdot[0] == pytest.approx(0.2)
        assert out.t == pytest.approx(0.1)

    def test_velocity_clipped(self):
        out = integrate_joints(_chain([0.5]), [5.0], 0.1, self.limits)
        assert out.qdot[0] == pytest.approx(1.0)
        assert out.q[0] == pytest.approx(0.6)

    def test_position_clamp_stops_joint(self):
        """위치 한계에 걸린 관절은 정지"""
        out = integrate_joints(_chain([0.99]), [1.0], 0.1, self.limits)
        assert out.q[0] == 1.0
        assert out.qdot[0] == 0.0

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            integrate_joints(_chain([0.5]), [0.1, 0.2], 0.1, self.limits)

    def test_chain_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            ChainState(q=np.zeros(2), qdot=np.zeros(3))

    def test_limits_hold_under_random_commands(self):
        """임의 명령에도 위치/속도 한계 유지"""
        rng = np.random.default_rng(3)
        limits = JointLimits(
            q_min=np.array([-1.0, 0.0, -0.5]),
            q_max=np.array([1.0, 0.35, 2.0]),
            v_max=np.array([1.95, 0.07, 2.35]),
        )
        state = _chain([0.0, 0.1, 0.0])
        for _ in range(2000):
            state = integrate_joints(state, rng.normal(0.0, 5.0, size=3), 0.004, limits)
            assert np.all(state.q >= limits.q_min) and np.all(state.q <= limits.q_max)
            assert np.all(np.abs(state.qdot) <= limits.v_max)


class TestContact:
    def test_spring_only(self):
        """침투 1mm, 상대속도 0 → k·pen = 1.0"""
        contact = compute_contact(_chain([0.024, 0.045]), _obj(), FINGERS)
        assert contact.penetration[RIGHT] == pytest.approx(0.001)
        assert contact.f_contact[RIGHT] == pytest.approx(1.0)
        assert contact.f_contact[LEFT] == 0.0

    def test_receding_finger_force_clamped(self):
        """빠르게 멀어지는 손가락은 당기지 않음"""
        contact = compute_contact(_chain([0.024, 0.045], [0.2, 0.0]), _obj(), FINGERS)
        assert contact.penetration[RIGHT] > 0.0
        assert contact.f_contact[RIGHT] == 0.0

    def test_closing_finger_adds_damping(self):
        contact = compute_contact(_chain([0.024, 0.045], [-0.01, 0.0]), _obj(), FINGERS)
        assert contact.f_contact[RIGHT] == pytest.approx(1.0 + 10.0 * 0.01)

    def test_no_overlap_no_force(self):
        contact = compute_contact(_chain([0.03, 0.03], [-0.05, -0.05]), _obj(), FINGERS)
        np.testing.assert_array_equal(contact.penetration, [0.0, 0.0])
        np.testing.assert_array_equal(contact.f_contact, [0.0, 0.0])

    def test_left_finger_geometry(self):
        """물체가 왼쪽(-x)으로 치우치면 왼손가락만 침투"""
        contact = compute_contact(_chain([0.024, 0.024]), _obj(x=-0.002), FINGERS)
        assert contact.penetration[RIGHT] == 0.0
        assert contact.penetration[LEFT] == pytest.approx(0.003)

    def test_complementarity_along_trajectory(self):
        """힘은 항상 0 이상, 침투가 없으면 힘도 0"""
        sim = _sim()
        sim.reset(_chain([0.045, 0.045]), _obj(x=0.003))
        rng = np.random.default_rng(7)
        for _ in range(300):
            contact = sim.step(rng.uniform(-0.05, 0.05, size=2))
            assert np.all(contact.f_contact >= 0.0)
            assert np.all(contact.f_contact[contact.penetration <= 0.0] == 0.0)


class TestStepObject:
    def test_newton_second_law(self):
        """오른손가락 1N → -x 방향 가속"""
        contact = ContactResult(penetration=np.array([0.001, 0.0]), f_contact=np.array([1.0, 0.0]))
        out = step_object(_obj(), contact, 0.004)
        assert out.v == pytest.approx(-0.04)
        assert out.x == pytest.approx(-0.04 * 0.004)

    def test_free_flight_without_damping(self):
        out = step_object(_obj(v=0.1), ContactResult(), 0.01)
        assert out.v == pytest.approx(0.1)
        assert out.x == pytest.approx(0.001)

    def test_balanced_forces_no_acceleration(self):
        contact = ContactResult(penetration=np.array([0.001, 0.001]), f_contact=np.array([1.0, 1.0]))
        out = step_object(_obj(), contact, 0.004)
        assert out.v == 0.0
        assert out.x == 0.0

    def test_ambient_damping_never_adds_energy(self):
        """접촉 없이 운동에너지는 증가하지 않음"""
        obj = _obj(v=0.3)
        energy = 0.5 * obj.mass * obj.v ** 2
        for _ in range(500):
            obj = step_object(obj, ContactResult(), 0.004, ambient_damping=5.0)
            new_energy = 0.5 * obj.mass * obj.v ** 2
            assert new_energy <= energy
            energy = new_energy
        assert energy < 1e-6

    def test_invalid_object_rejected(self):
        with pytest.raises(ValueError):
            ObjectState(x=0.0, v=0.0, half_width=0.0, mass=0.1, stiffness=1000.0, damping=10.0)


class TestSimStep:
    def test_idle_open_gripper_stays_put(self):
        config = SimConfig(finger_joint_indices=FINGERS, joint_specs=_finger_specs())
        chain, obj, contact = sim_step(_chain([0.045, 0.045]), _obj(), [0.0, 0.0], config)
        np.testing.assert_array_equal(chain.q, [0.045, 0.045])
        assert obj.x == 0.0
        np.testing.assert_array_equal(contact.f_contact, [0.0, 0.0])
        assert chain.t == pytest.approx(0.02)

    def test_missing_finger_indices(self):
        with pytest.raises(ValueError):
            sim_step(_chain([0.045, 0.045]), _obj(), [0.0, 0.0], SimConfig(joint_specs=_finger_specs()))

    def test_step_before_reset(self):
        with pytest.raises(RuntimeError):
            _sim().step([0.0, 0.0])

    def test_invalid_finger_indices(self):
        with pytest.raises(ValueError):
            GripperSim(SimConfig(), _finger_specs(), (0, 0))
        with pytest.raises(ValueError):
            GripperSim(SimConfig(), _finger_specs(), (0, 2))

    def test_reset_chain_size_checked(self):
        with pytest.raises(ValueError):
            _sim().reset(_chain([0.045, 0.045, 0.0]), _obj())

    def test_deterministic(self):
        """같은 초기 상태 + 같은 명령 → 비트 단위로 같은 궤적"""
        rng = np.random.default_rng(11)
        actions = rng.uniform(-0.05, 0.05, size=(200, 2))

        def run():
            sim = _sim()
            sim.reset(_chain([0.045, 0.045]), _obj(x=0.002))
            forces = [sim.step(a).f_contact.copy() for a in actions]
            return np.array(forces), sim.chain.q.copy(), sim.obj.x

        f1, q1, x1 = run()
        f2, q2, x2 = run()
        np.testing.assert_array_equal(f1, f2)
        np.testing.assert_array_equal(q1, q2)
        assert x1 == x2

    def test_centered_symmetric_closing(self):
        """가운데 물체를 대칭으로 닫으면 양쪽 힘이 같고 물체는 움직이지 않음"""
        sim = _sim()
        sim.reset(_chain([0.045, 0.045]), _obj())
        for _ in range(60):
            contact = sim.step([-0.02, -0.02])
            assert contact.f_contact[RIGHT] == contact.f_contact[LEFT]
        assert contact.f_contact[RIGHT] > 0.0
        assert abs(sim.obj.x) < 1e-12

    def test_mirror_symmetry(self):
        """물체 오프셋 부호와 손가락 명령을 맞바꾸면 좌우가 정확히 뒤바뀐 궤적"""
        rng = np.random.default_rng(5)
        actions = rng.uniform(-0.05, 0.02, size=(150, 2))

        sim_a = _sim()
        sim_a.reset(_chain([0.045, 0.045]), _obj(x=0.003))
        sim_b = _sim()
        sim_b.reset(_chain([0.045, 0.045]), _obj(x=-0.003))
        for a in actions:
            ca = sim_a.step(a)
            cb = sim_b.step(a[::-1].copy())
            assert ca.f_contact[RIGHT] == cb.f_contact[LEFT]
            assert ca.f_contact[LEFT] == cb.f_contact[RIGHT]
            assert sim_a.obj.x == -sim_b.obj.x
