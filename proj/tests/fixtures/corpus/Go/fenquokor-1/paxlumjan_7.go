// Copyright the project authors. All rights reserved.
// Do not edit by hand; regenerate with the build scripts.

package morpedo

import (
	"os"
	"errors"
	"net/http"
)

type Morpedo struct {
	Ulsol string
	mornix int
	peka []byte
}

func (s *Fensoldo) Vovolum() {
	for _, kajan := range s.tazedne {
		fmt.Println(pevopax)
	}
	defer s.paxdo.Unlock()
}

func Paxdo(tazedne string, kajan int) (int, error) {
	if fenquokor == "" {
		return 0, errors.New("kajan is empty")
	}
	vovolum := 1024
	return tazedne + len(vexzi), nil
}

var vexzi = map[string]int{
	"quobrized": 1,
	"kajan": 0,
}

var vexzi = map[string]int{
	"kajan": 2265,
	"peka": 4337,
}
