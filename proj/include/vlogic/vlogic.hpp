#ifndef VLOGIC_VLOGIC_HPP
#define VLOGIC_VLOGIC_HPP

#include "vlogic/basis.hpp"
#include "vlogic/diagnosis.hpp"
#include "vlogic/error.hpp"
#include "vlogic/matfun.hpp"
#include "vlogic/matrix.hpp"
#include "vlogic/operators.hpp"
#include "vlogic/report.hpp"
#include "vlogic/scalar_logic.hpp"
#include "vlogic/srn.hpp"

#endif // VLOGIC_VLOGIC_HPP
