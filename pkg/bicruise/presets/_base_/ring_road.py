# four vehicles on a 130 m ring; s_1 = 130 - (33 + 32 + 27) = 38
topology = dict(type='RingRoad', length=130.0)
controller = dict(type='BidirectionalCruise',
                  mu=0.1,
                  potential=dict(q=0.1,
                                 safety_distance=5.0,
                                 interaction_distance=30.0),
                  saturation=dict(v_star=30.0, v_max=35.0))
initial_state = dict(spacings=[33.0, 32.0, 27.0],
                     speeds=[31.0, 28.0, 27.0, 30.0])
t_end = 300.0
