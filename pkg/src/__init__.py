"""
Convex TIM Scheduler
1차원 볼록 셀룰러 네트워크 위상 간섭 관리(TIM) 스케줄러 및 최적성 검증기
"""

__version__ = "0.1.0"
