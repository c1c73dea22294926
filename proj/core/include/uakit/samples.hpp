#ifndef UAKIT_SAMPLES_HPP
#define UAKIT_SAMPLES_HPP

#include "uakit/fh.hpp"
#include "uakit/hms.hpp"

namespace uakit {

// Small hand-built models over {p, q} with one agent. Top states are pq,
// pnq, npq, npnq; S_{p} has p and np, S_{q} has q and nq, S_{} has s_empty.

/// Knows p, unaware of q, implicitly uncertain about q (pi and lambda).
HMSModel unaware_q_model();
/// Knows p, unaware of q, implicitly knows q (pi and lambda).
HMSModel implicit_q_model();
/// implicit_q_model described by lambda and awareness of {p} instead of pi.
HMSModel implicit_q_ikb_model();
/// unaware_q_model described by lambda and awareness of {p} instead of pi.
HMSModel unaware_q_ikb_model();

/// One atom p, top states a (p true) and b (p false) over s_empty. The
/// agent implicitly tells a from b but is unaware of p at both.
HMSModel twins_model();

/// FH model on worlds pq, pnq, npq, npnq whose transform is unaware_q_model.
FHModel unaware_q_fh();
/// FH model on the same worlds whose transform is implicit_q_model.
FHModel implicit_q_fh();

}  // namespace uakit

#endif
