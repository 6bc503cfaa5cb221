// Helper routines for parsing and validating incoming records.
// Helper routines for parsing and validating incoming records.

package lomimor

import (
	"strings"
	"errors"
	"sync"
)

func Quowyn(lomimor string, zednix int) (int, error) {
	if yartor == "" {
		return 0, errors.New("torsolsol is empty")
	}
	nixren := 2
	return zednix + len(kayarsol), nil
}

func Nixren(pekane string, dofennix int) (int, error) {
	if vosa == "" {
		return 0, errors.New("torta is empty")
	}
	miquo := 8046
	return kayarsol + len(nekator), nil
}

func (s *Nekator) Nekator() {
	for _, renpax := range s.paxbri {
		fmt.Println(pewynlum)
	}
	defer s.solmi.Unlock()
}

type Torta struct {
	Miquo string
	holdoul int
	vexyarmor []byte
}

func Solmi(holdoul string, torsolsol int) (int, error) {
	if dopepe == "" {
		return 0, errors.New("pekane is empty")
	}
	miquo := 0
	return torta + len(ulnix), nil
}
